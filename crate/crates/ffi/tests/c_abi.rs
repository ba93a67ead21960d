use std::ffi::CStr;
use std::ptr;

use hesspave_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hp_last_error()) }.to_string_lossy().into_owned()
}

struct Table(*mut HpCellTable);

impl Table {
    fn new(lambda: &[usize], h: Option<&[usize]>) -> Result<Self, HpStatus> {
        let mut out = ptr::null_mut();
        let (hp, hl) = h.map_or((ptr::null(), 0), |h| (h.as_ptr(), h.len()));
        let s = unsafe { hp_cells_new(lambda.as_ptr(), lambda.len(), hp, hl, &mut out) };
        if s == HpStatus::Ok {
            Ok(Table(out))
        } else {
            assert!(out.is_null());
            Err(s)
        }
    }

    fn poincare(&self) -> Vec<u64> {
        let mut len = 0;
        let s = unsafe { hp_poincare(self.0, ptr::null_mut(), 0, &mut len) };
        if len == 0 {
            assert_eq!(s, HpStatus::Ok);
            return Vec::new();
        }
        assert_eq!(s, HpStatus::BufferTooSmall);
        let mut v = vec![0u64; len];
        assert_eq!(unsafe { hp_poincare(self.0, v.as_mut_ptr(), v.len(), &mut len) }, HpStatus::Ok);
        v
    }
}

impl Drop for Table {
    fn drop(&mut self) {
        unsafe { hp_cells_free(self.0) }
    }
}

#[test]
fn cells_of_222_springer_fiber() {
    let t = Table::new(&[2, 2, 2], None).unwrap();
    assert_eq!(unsafe { hp_cells_len(t.0) }, 90);
    assert_eq!(unsafe { hp_cells_n(t.0) }, 6);
    assert_eq!(t.poincare(), vec![1, 5, 14, 24, 25, 16, 5]);

    let mut found = false;
    let mut word = [0usize; 6];
    for i in 0..90 {
        assert_eq!(unsafe { hp_cells_word(t.0, i, word.as_mut_ptr(), word.len()) }, HpStatus::Ok);
        if word == [3, 6, 2, 1, 5, 4] {
            let mut dim = 0;
            assert_eq!(unsafe { hp_cells_dim(t.0, i, &mut dim) }, HpStatus::Ok);
            assert_eq!(dim, 6);
            found = true;
        }
    }
    assert!(found);
}

#[test]
fn index_and_buffer_errors() {
    let t = Table::new(&[1, 1], None).unwrap();
    let mut dim = 0;
    assert_eq!(unsafe { hp_cells_dim(t.0, 2, &mut dim) }, HpStatus::OutOfRange);
    assert!(last_error().contains("out of range"));
    let mut word = [0usize; 1];
    assert_eq!(unsafe { hp_cells_word(t.0, 0, word.as_mut_ptr(), 1) }, HpStatus::BufferTooSmall);
    assert_eq!(unsafe { hp_cells_dim(ptr::null(), 0, &mut dim) }, HpStatus::NullPointer);
    assert_eq!(unsafe { hp_cells_len(ptr::null()) }, 0);
    unsafe { hp_cells_free(ptr::null_mut()) };
}

#[test]
fn invalid_h_reports_every_violation() {
    let err = Table::new(&[2, 2], Some(&[0, 2, 1, 1])).err();
    assert_eq!(err, Some(HpStatus::InvalidInput));
    let msg = last_error();
    assert!(msg.contains("h(2) = 2"), "{msg}");
    assert!(msg.contains("h(3) = 1 is smaller"), "{msg}");
    assert_eq!(Table::new(&[2, 1], Some(&[0, 1])).err(), Some(HpStatus::InvalidInput));
}

#[test]
fn empty_variety() {
    let t = Table::new(&[2], Some(&[0, 0])).unwrap();
    assert_eq!(unsafe { hp_cells_len(t.0) }, 0);
    assert!(t.poincare().is_empty());
    let mut word = [0usize; 2];
    let s = unsafe { hp_r0_word([2usize].as_ptr(), 1, [0usize, 0].as_ptr(), 2, word.as_mut_ptr(), 2) };
    assert_eq!(s, HpStatus::Empty);
}

#[test]
fn r0_for_two_rows_of_one() {
    let mut word = [0usize; 2];
    let s = unsafe { hp_r0_word([1usize, 1].as_ptr(), 2, [0usize, 0].as_ptr(), 2, word.as_mut_ptr(), 2) };
    assert_eq!(s, HpStatus::Ok);
    assert_eq!(last_error(), "");
    // R0 = [[2],[1]]: the box of 1 in the base filling holds 1.
    assert_eq!(word, [1, 2]);
}

#[test]
fn point_counts() {
    let (mut total, mut predicted) = (0u64, 0u64);
    let s = unsafe { hp_point_count([2usize, 2].as_ptr(), 2, ptr::null(), 0, 2, 24, &mut total, &mut predicted) };
    assert_eq!(s, HpStatus::Ok);
    assert_eq!((total, predicted), (15, 15));
    let s = unsafe { hp_point_count([2usize, 2].as_ptr(), 2, ptr::null(), 0, 4, 24, &mut total, &mut predicted) };
    assert_eq!(s, HpStatus::InvalidField);
    let s = unsafe { hp_point_count([3usize, 3].as_ptr(), 2, ptr::null(), 0, 2, 4, &mut total, &mut predicted) };
    assert_eq!(s, HpStatus::BudgetExceeded);
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(hp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hesspave.h")).unwrap();
    for name in [
        "hp_cells_new",
        "hp_cells_len",
        "hp_cells_n",
        "hp_cells_dim",
        "hp_cells_word",
        "hp_poincare",
        "hp_cells_free",
        "hp_r0_word",
        "hp_point_count",
        "hp_last_error",
        "hp_version",
        "typedef struct HpCellTable HpCellTable",
        "HP_STATUS_BUDGET_EXCEEDED = 7",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
