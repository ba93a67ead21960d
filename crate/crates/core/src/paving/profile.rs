use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinatorics::{HessenbergFunction, Tableau};
use crate::error::{Error, Result};
use crate::paving::inversions::hessenberg_inversions_of;

/// `d(i, j)` for `1 ≤ i ≤ j ≤ columns`: Hessenberg inversions `(k, ℓ)` with `k`
/// in column `i` and `ℓ` in column `j`. Columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InversionProfile {
    columns: usize,
    #[serde(serialize_with = "serialize_profile")]
    d: BTreeMap<(usize, usize), usize>,
}

fn serialize_profile<S: serde::Serializer>(
    d: &BTreeMap<(usize, usize), usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let entries: Vec<[usize; 3]> = d.iter().map(|(&(i, j), &v)| [i, j, v]).collect();
    entries.serialize(s)
}

impl InversionProfile {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.d.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn total(&self) -> usize {
        self.d.values().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.d.iter().map(|(&k, &v)| (k, v))
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.d.iter().all(|(&(i, j), &v)| v <= other.get(i, j))
    }
}

pub fn inversion_profile(r: &Tableau, h: &HessenbergFunction) -> Result<InversionProfile> {
    if !r.is_h_strict(h)? {
        return Err(Error::NotHStrict);
    }
    let columns = r.num_columns();
    let mut d = BTreeMap::new();
    for i in 1..=columns {
        for j in i..=columns {
            d.insert((i, j), 0);
        }
    }
    for (k, l) in hessenberg_inversions_of(r, h)?.iter() {
        let key = (r.position(k).col, r.position(l).col);
        *d.get_mut(&key).expect("k is weakly left of l") += 1;
    }
    Ok(InversionProfile { columns, d })
}

/// One state of the column-sorting process restricted to the columns it touches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SortStep {
    /// 1-based tableau columns shown in `block`, in order.
    pub columns: Vec<usize>,
    /// `block[row][c]` is the entry in `columns[c]`; `None` is a blank box.
    pub block: Vec<Vec<Option<usize>>>,
    /// `d(i, j)` evaluated on this state.
    pub d: usize,
}

impl SortStep {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for row in &self.block {
            let cells: Vec<String> = row.iter().map_while(|c| c.map(|v| v.to_string())).collect();
            if cells.is_empty() {
                continue;
            }
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Sorting columns `i ≤ j` (plus `j + 1`) of an `h`-strict filling into
/// standard order one column at a time, as used to compare `d_R(i, j)` with
/// `d_{std(R)}(i, j)`.
///
/// Column `i` is bubble sorted first, carrying whole rows of the block along;
/// then column `j`, carrying column `j + 1`; then column `j + 1` alone. When
/// `i = j` only columns `i` and `i + 1` are involved. Blank boxes count as +∞.
/// The trace starts with the initial state and records each phase that moved
/// something.
pub fn column_sort_trace(r: &Tableau, i: usize, j: usize, h: &HessenbergFunction) -> Result<Vec<SortStep>> {
    if !r.is_h_strict(h)? {
        return Err(Error::NotHStrict);
    }
    let m = r.num_columns();
    let valid = i >= 1 && i <= j && if i == j { i <= m } else { j < m };
    if !valid {
        return Err(Error::InvalidColumns { i, j, columns: m });
    }
    let mut columns = vec![i];
    if i < j {
        columns.push(j);
    }
    if j < m {
        columns.push(j + 1);
    }
    let mut block: Vec<Vec<Option<usize>>> = (1..=r.shape().num_rows())
        .map(|row| columns.iter().map(|&c| r.entry(row, c)).collect())
        .collect();

    let d_of = |block: &[Vec<Option<usize>>]| count_block(block, i == j, h);
    let mut trace = vec![SortStep { columns: columns.clone(), block: block.clone(), d: d_of(&block) }];

    // (sorted column, first carried column) in block coordinates.
    let phases: Vec<(usize, usize)> = if i == j {
        vec![(0, 0), (1, 1)]
    } else {
        vec![(0, 0), (1, 1), (2, 2)]
    };
    for (key, from) in phases {
        if key >= columns.len() {
            continue;
        }
        let last = if key == columns.len() - 1 { key } else { columns.len() - 1 };
        if bubble_sort_block(&mut block, key, from, last) {
            trace.push(SortStep { columns: columns.clone(), block: block.clone(), d: d_of(&block) });
        }
    }
    Ok(trace)
}

fn rank(v: Option<usize>) -> usize {
    v.unwrap_or(usize::MAX)
}

/// Bubble sorts block column `key` top to bottom, swapping block columns
/// `from..=last` along with it. Returns whether anything moved.
fn bubble_sort_block(block: &mut [Vec<Option<usize>>], key: usize, from: usize, last: usize) -> bool {
    let mut moved = false;
    let rows = block.len();
    loop {
        let mut swapped = false;
        for a in 0..rows.saturating_sub(1) {
            if rank(block[a][key]) > rank(block[a + 1][key]) {
                let (upper, lower) = block.split_at_mut(a + 1);
                upper[a][from..=last].swap_with_slice(&mut lower[0][from..=last]);
                swapped = true;
                moved = true;
            }
        }
        if !swapped {
            return moved;
        }
    }
}

/// `d(i, j)` on a block whose first column is `i`. With `same` the block is
/// `[i, i+1]`, otherwise `[i, j, j+1]`; the trailing column may be absent.
fn count_block(block: &[Vec<Option<usize>>], same: bool, h: &HessenbergFunction) -> usize {
    let (kc, lc, rc) = if same { (0, 0, 1) } else { (0, 1, 2) };
    let mut count = 0;
    for (lrow, row) in block.iter().enumerate() {
        let Some(l) = row.get(lc).copied().flatten() else { continue };
        let bound = row.get(rc).copied().flatten().map(|r| h.get(r));
        for (krow, other) in block.iter().enumerate() {
            let Some(k) = other[kc] else { continue };
            if k <= l || bound.is_some_and(|b| k > b) {
                continue;
            }
            if !same || krow > lrow {
                count += 1;
            }
        }
    }
    count
}
