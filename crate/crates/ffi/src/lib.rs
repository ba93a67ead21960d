//! C ABI over `hesspave`.
//!
//! Every function returns an [`HpStatus`]; on failure a message is available
//! from [`hp_last_error`] on the same thread. Arrays are passed as pointer plus
//! length. A null `h` pointer selects the Springer function `(0, 1, …, n-1)`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hesspave::oracle::Oracle;
use hesspave::paving::{enumerate_cells, r0_tableau, CellDescriptor, PoincareData};
use hesspave::{Composition, Error, HessenbergFunction};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    /// λ, h or their sizes are invalid.
    InvalidInput = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// An index is out of range.
    OutOfRange = 3,
    /// The output buffer is too small.
    BufferTooSmall = 4,
    /// The variety is empty.
    Empty = 5,
    /// `q` is not one of 2, 3, 5, 7, 11, 13.
    InvalidField = 6,
    /// The brute-force search exceeds the work budget.
    BudgetExceeded = 7,
    /// The brute-force count disagrees with the paving.
    Mismatch = 8,
    /// Internal error; the library caught a panic.
    Internal = 9,
}

/// Cell table for one `(λ, h)`; create with [`hp_cells_new`], release with [`hp_cells_free`].
pub struct HpCellTable {
    n: usize,
    cells: Vec<CellDescriptor>,
    poincare: PoincareData,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: HpStatus, msg: impl Into<String>) -> HpStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> HpStatus {
    match e {
        Error::InvalidField(_) => HpStatus::InvalidField,
        Error::BudgetExceeded { .. } => HpStatus::BudgetExceeded,
        _ => HpStatus::InvalidInput,
    }
}

fn guard(body: impl FnOnce() -> HpStatus) -> HpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => {
            if s == HpStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(HpStatus::Internal, "internal error"),
    }
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if p.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn inputs(
    lambda: *const usize,
    lambda_len: usize,
    h: *const usize,
    h_len: usize,
) -> Result<(Composition, HessenbergFunction), HpStatus> {
    let parts = slice(lambda, lambda_len).ok_or_else(|| fail(HpStatus::NullPointer, "lambda is null"))?;
    let shape = Composition::new(parts.to_vec()).map_err(|e| fail(HpStatus::InvalidInput, e.to_string()))?;
    if shape.size() == 0 {
        return Err(fail(HpStatus::InvalidInput, "lambda must have a positive part"));
    }
    let h = if h.is_null() {
        HessenbergFunction::springer(shape.size())
    } else {
        let values = slice(h, h_len).expect("non-null");
        HessenbergFunction::new(values.to_vec()).map_err(|e| fail(HpStatus::InvalidInput, e.to_string()))?
    };
    if h.n() != shape.size() {
        return Err(fail(
            HpStatus::InvalidInput,
            format!("h has {} values but lambda has {} boxes", h.n(), shape.size()),
        ));
    }
    Ok((shape, h))
}

/// Enumerates the cells of `Hess(X_λ, h)` into a new table written to `*out`.
///
/// # Safety
/// `lambda` must point to `lambda_len` values, `h` to `h_len` values or be
/// null, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_cells_new(
    lambda: *const usize,
    lambda_len: usize,
    h: *const usize,
    h_len: usize,
    out: *mut *mut HpCellTable,
) -> HpStatus {
    guard(|| {
        if out.is_null() {
            return fail(HpStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let (shape, h) = match inputs(lambda, lambda_len, h, h_len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match enumerate_cells(&shape, &h) {
            Ok(cells) => {
                let poincare = PoincareData::from_cells(&cells);
                *out = Box::into_raw(Box::new(HpCellTable { n: shape.size(), cells, poincare }));
                HpStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Number of cells; 0 for a null table.
///
/// # Safety
/// `table` must be null or come from [`hp_cells_new`].
#[no_mangle]
pub unsafe extern "C" fn hp_cells_len(table: *const HpCellTable) -> usize {
    table.as_ref().map_or(0, |t| t.cells.len())
}

/// `n = |λ|`, the length of every word; 0 for a null table.
///
/// # Safety
/// `table` must be null or come from [`hp_cells_new`].
#[no_mangle]
pub unsafe extern "C" fn hp_cells_n(table: *const HpCellTable) -> usize {
    table.as_ref().map_or(0, |t| t.n)
}

/// Dimension of cell `index`.
///
/// # Safety
/// `table` must come from [`hp_cells_new`] and `dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_cells_dim(table: *const HpCellTable, index: usize, dim: *mut usize) -> HpStatus {
    guard(|| {
        let (Some(t), false) = (table.as_ref(), dim.is_null()) else {
            return fail(HpStatus::NullPointer, "table or dim is null");
        };
        match t.cells.get(index) {
            Some(c) => {
                *dim = c.dim;
                HpStatus::Ok
            }
            None => fail(HpStatus::OutOfRange, format!("index {index} out of range")),
        }
    })
}

/// Writes the one-line notation of cell `index`'s permutation `w` into `buf`,
/// which must hold at least [`hp_cells_n`] values.
///
/// # Safety
/// `table` must come from [`hp_cells_new`]; `buf` must point to `buf_len` writable values.
#[no_mangle]
pub unsafe extern "C" fn hp_cells_word(
    table: *const HpCellTable,
    index: usize,
    buf: *mut usize,
    buf_len: usize,
) -> HpStatus {
    guard(|| {
        let (Some(t), false) = (table.as_ref(), buf.is_null()) else {
            return fail(HpStatus::NullPointer, "table or buf is null");
        };
        let Some(c) = t.cells.get(index) else {
            return fail(HpStatus::OutOfRange, format!("index {index} out of range"));
        };
        if buf_len < t.n {
            return fail(HpStatus::BufferTooSmall, format!("need {} values", t.n));
        }
        std::slice::from_raw_parts_mut(buf, t.n).copy_from_slice(c.w.word());
        HpStatus::Ok
    })
}

/// Cell counts by dimension. `*len` receives the number of coefficients; if it
/// exceeds `cap` nothing else is written and `BufferTooSmall` is returned.
/// An empty variety has zero coefficients.
///
/// # Safety
/// `table` must come from [`hp_cells_new`]; `coeffs` must point to `cap`
/// writable values (or be null with `cap == 0`); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_poincare(
    table: *const HpCellTable,
    coeffs: *mut u64,
    cap: usize,
    len: *mut usize,
) -> HpStatus {
    guard(|| {
        let (Some(t), false) = (table.as_ref(), len.is_null()) else {
            return fail(HpStatus::NullPointer, "table or len is null");
        };
        let c = &t.poincare.coeffs;
        *len = c.len();
        if c.len() > cap {
            return fail(HpStatus::BufferTooSmall, format!("need {} coefficients", c.len()));
        }
        if !c.is_empty() {
            if coeffs.is_null() {
                return fail(HpStatus::NullPointer, "coeffs is null");
            }
            std::slice::from_raw_parts_mut(coeffs, c.len()).copy_from_slice(c);
        }
        HpStatus::Ok
    })
}

/// Releases a table. Null is ignored.
///
/// # Safety
/// `table` must be null or come from [`hp_cells_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hp_cells_free(table: *mut HpCellTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Writes the permutation of the zero-dimensional cell into `buf` (length at
/// least `|λ|`). Returns `Empty` when the variety is empty.
///
/// # Safety
/// Array arguments as for [`hp_cells_new`]; `buf` must point to `buf_len` writable values.
#[no_mangle]
pub unsafe extern "C" fn hp_r0_word(
    lambda: *const usize,
    lambda_len: usize,
    h: *const usize,
    h_len: usize,
    buf: *mut usize,
    buf_len: usize,
) -> HpStatus {
    guard(|| {
        let (shape, h) = match inputs(lambda, lambda_len, h, h_len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        if buf.is_null() {
            return fail(HpStatus::NullPointer, "buf is null");
        }
        if buf_len < shape.size() {
            return fail(HpStatus::BufferTooSmall, format!("need {} values", shape.size()));
        }
        match r0_tableau(&shape, &h) {
            Ok(Some(t)) => {
                std::slice::from_raw_parts_mut(buf, shape.size()).copy_from_slice(t.permutation().word());
                HpStatus::Ok
            }
            Ok(None) => fail(HpStatus::Empty, "the variety is empty"),
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Brute-force `|Hess(X_λ, h)(F_q)|` into `*total` and the paving's prediction
/// into `*predicted`. Returns `Mismatch` when they differ.
///
/// # Safety
/// Array arguments as for [`hp_cells_new`]; `total` and `predicted` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_point_count(
    lambda: *const usize,
    lambda_len: usize,
    h: *const usize,
    h_len: usize,
    q: u32,
    budget_bits: u32,
    total: *mut u64,
    predicted: *mut u64,
) -> HpStatus {
    guard(|| {
        if total.is_null() || predicted.is_null() {
            return fail(HpStatus::NullPointer, "total or predicted is null");
        }
        let (shape, h) = match inputs(lambda, lambda_len, h, h_len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        let report = Oracle::new(q).and_then(|o| o.with_budget(budget_bits).variety_point_count(&shape, &h));
        match report {
            Ok(r) => {
                *total = r.total;
                *predicted = r.predicted;
                if r.matches {
                    HpStatus::Ok
                } else {
                    fail(HpStatus::Mismatch, "brute-force count differs from the paving")
                }
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Message for the last failure on this thread; empty after a success. The
/// pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hp_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains a nul byte"),
    };
    VERSION.as_ptr()
}
