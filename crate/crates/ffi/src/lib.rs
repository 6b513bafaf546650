//! C ABI over `stanley-core`.
//!
//! Series are handed out as opaque `StanleySeries` handles owned by the
//! caller until passed to [`stanley_series_free`]. Every fallible call returns
//! a [`StanleyStatus`]; on failure a message is kept per thread and can be
//! read with [`stanley_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use stanley_core::partitions::{classify, Partition};
use stanley_core::stanley::{self, Stat};
use stanley_core::verify::{run_suite, Bounds, Suite};
use stanley_core::TruncatedSeries;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StanleyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    /// A coefficient does not fit the requested integer type.
    Overflow = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StanleyStat {
    P = 0,
    T = 1,
    U = 2,
    F = 3,
}

impl From<StanleyStat> for Stat {
    fn from(s: StanleyStat) -> Self {
        match s {
            StanleyStat::P => Stat::P,
            StanleyStat::T => Stat::T,
            StanleyStat::U => Stat::U,
            StanleyStat::F => Stat::F,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StanleySuite {
    All = 0,
    Series = 1,
    Combinatorial = 2,
    ProofSteps = 3,
    Congruences = 4,
}

impl From<StanleySuite> for Suite {
    fn from(s: StanleySuite) -> Self {
        match s {
            StanleySuite::All => Suite::All,
            StanleySuite::Series => Suite::Series,
            StanleySuite::Combinatorial => Suite::Combinatorial,
            StanleySuite::ProofSteps => Suite::ProofSteps,
            StanleySuite::Congruences => Suite::Congruences,
        }
    }
}

/// Opaque truncated power series.
pub struct StanleySeries {
    inner: TruncatedSeries,
}

/// Per-partition statistics.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StanleyPartitionStats {
    pub odd_parts: usize,
    pub odd_parts_conjugate: usize,
    pub even_hooks: usize,
    /// 1 when O(λ) ≡ O(λ') (mod 4), else 0.
    pub is_t_type: u8,
}

/// Outcome counts of a verification suite.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StanleySuiteSummary {
    pub checks: usize,
    pub failed: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: StanleyStatus, msg: impl Into<String>) -> StanleyStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `StanleyStatus::Panic`.
fn guard(f: impl FnOnce() -> StanleyStatus) -> StanleyStatus {
    clear_error();
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(StanleyStatus::Panic, "internal panic"),
    }
}

fn emit_series(out: *mut *mut StanleySeries, series: TruncatedSeries) -> StanleyStatus {
    let handle = Box::into_raw(Box::new(StanleySeries { inner: series }));
    // SAFETY: callers checked `out` for null.
    unsafe { *out = handle };
    StanleyStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn stanley_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Generating function of `stat` truncated at `order`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_new(
    stat: StanleyStat,
    order: usize,
    out: *mut *mut StanleySeries,
) -> StanleyStatus {
    guard(|| {
        if out.is_null() {
            return fail(StanleyStatus::NullPointer, "out is NULL");
        }
        match stanley::series_for(stat.into(), order) {
            Ok(s) => emit_series(out, s),
            Err(e) => fail(StanleyStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Generating function of `u(4n + residue)` truncated at `order`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_u_progression(
    residue: usize,
    order: usize,
    out: *mut *mut StanleySeries,
) -> StanleyStatus {
    guard(|| {
        if out.is_null() {
            return fail(StanleyStatus::NullPointer, "out is NULL");
        }
        match stanley::u_progression_series(residue, order) {
            Ok(s) => emit_series(out, s),
            Err(e) => fail(StanleyStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Truncation order of a series, or 0 for NULL.
///
/// # Safety
/// `series` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_order(series: *const StanleySeries) -> usize {
    series.as_ref().map_or(0, |s| s.inner.order())
}

/// Coefficient of `q^index` as a signed 64-bit integer.
///
/// # Safety
/// `series` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_coeff_i64(
    series: *const StanleySeries,
    index: usize,
    out: *mut i64,
) -> StanleyStatus {
    guard(|| {
        let (Some(s), false) = (series.as_ref(), out.is_null()) else {
            return fail(StanleyStatus::NullPointer, "series or out is NULL");
        };
        if index > s.inner.order() {
            return fail(
                StanleyStatus::OutOfRange,
                format!("index {index} exceeds order {}", s.inner.order()),
            );
        }
        match i64::try_from(s.inner.coeff(index)) {
            Ok(v) => {
                *out = v;
                StanleyStatus::Ok
            }
            Err(_) => fail(
                StanleyStatus::Overflow,
                format!("coefficient {index} does not fit in 64 bits"),
            ),
        }
    })
}

/// Coefficient of `q^index` as a decimal string. Release it with
/// [`stanley_string_free`].
///
/// # Safety
/// `series` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_coeff_string(
    series: *const StanleySeries,
    index: usize,
    out: *mut *mut c_char,
) -> StanleyStatus {
    guard(|| {
        let (Some(s), false) = (series.as_ref(), out.is_null()) else {
            return fail(StanleyStatus::NullPointer, "series or out is NULL");
        };
        if index > s.inner.order() {
            return fail(
                StanleyStatus::OutOfRange,
                format!("index {index} exceeds order {}", s.inner.order()),
            );
        }
        let text = CString::new(s.inner.coeff(index).to_string()).expect("digits contain no NUL");
        *out = text.into_raw();
        StanleyStatus::Ok
    })
}

/// # Safety
/// `series` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stanley_series_free(series: *mut StanleySeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stanley_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Statistics of the partition with the given parts (nonincreasing,
/// positive). `len == 0` is the empty partition and `parts` may be NULL.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be valid for one
/// write.
#[no_mangle]
pub unsafe extern "C" fn stanley_classify_partition(
    parts: *const usize,
    len: usize,
    out: *mut StanleyPartitionStats,
) -> StanleyStatus {
    guard(|| {
        if out.is_null() || (parts.is_null() && len > 0) {
            return fail(StanleyStatus::NullPointer, "parts or out is NULL");
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(parts, len)
        };
        match Partition::new(slice.to_vec()) {
            Ok(lambda) => {
                let s = classify(&lambda);
                *out = StanleyPartitionStats {
                    odd_parts: s.odd_parts,
                    odd_parts_conjugate: s.odd_parts_conjugate,
                    even_hooks: s.even_hooks,
                    is_t_type: s.is_t_type as u8,
                };
                StanleyStatus::Ok
            }
            Err(e) => fail(StanleyStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Runs a verification suite. Reports are discarded; only counts are
/// returned.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn stanley_verify_suite(
    suite: StanleySuite,
    order: usize,
    enum_bound: usize,
    oracle_bound: usize,
    out: *mut StanleySuiteSummary,
) -> StanleyStatus {
    guard(|| {
        if out.is_null() {
            return fail(StanleyStatus::NullPointer, "out is NULL");
        }
        if order < 2 {
            return fail(StanleyStatus::InvalidArgument, "order must be at least 2");
        }
        let reports = run_suite(
            suite.into(),
            &Bounds {
                order,
                enum_bound,
                oracle_bound,
            },
        );
        *out = StanleySuiteSummary {
            checks: reports.len(),
            failed: reports.iter().filter(|r| !r.passed).count(),
        };
        StanleyStatus::Ok
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn stanley_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(
        concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes(),
    ) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}
