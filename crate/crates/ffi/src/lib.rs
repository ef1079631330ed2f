//! C ABI for the afsimplex solver.
//!
//! Problems and outcomes are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`AfsError`]; on failure a message is available from
//! [`afs_last_error_message`] on the same thread. Strings returned through
//! `*mut c_char` out-parameters are allocated by Rust and must be released
//! with [`afs_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use afsimplex::{
    compare, emit_comparison_json, emit_outcome_json, parse_lp, solve, standardize, Error, Limits, Phase1Method,
    SolveOutcome, SolveStatus, SolverConfig, StandardProblem, TieBreak,
};
use libc::{c_char, size_t};
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfsError {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    IndexOutOfRange = 5,
    NoValue = 6,
    Solver = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfsSolveStatus {
    Optimal = 0,
    Infeasible = 1,
    Unbounded = 2,
    CycleDetected = 3,
    IterationLimit = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfsMethod {
    ArtificialFree = 0,
    Traditional = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfsTieBreak {
    SmallestLabel = 0,
    SmallestAbsPivot = 1,
    LargestAbsPivot = 2,
}

/// Solver options. Obtain defaults from [`afs_options_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AfsOptions {
    pub method: AfsMethod,
    pub tie_break: AfsTieBreak,
    /// 0 selects the default cap.
    pub max_iterations: size_t,
    pub conjugate_slack_trick: bool,
}

/// Opaque LP in standard form.
pub struct AfsProblem {
    inner: StandardProblem,
}

/// Opaque result of a solve.
pub struct AfsOutcome {
    inner: SolveOutcome<BigRational>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

struct Failure(AfsError, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::EmptyProblem
            | Error::UnsupportedFreeVariable(_)
            | Error::DuplicateConstraint(_)
            | Error::DuplicateVariable(_)
            | Error::UnknownVariable(_) => AfsError::Parse,
            Error::InvalidTolerance(_) => AfsError::InvalidArgument,
            _ => AfsError::Solver,
        };
        Failure(code, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(AfsError::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating failures and panics into codes plus a message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> AfsError {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            AfsError::Ok
        }
        Ok(Err(Failure(code, message))) => {
            set_last_error(&message);
            code
        }
        Err(_) => {
            set_last_error("internal panic");
            AfsError::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(text: String) -> Result<*mut c_char, Failure> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|_| Failure(AfsError::Solver, "string contains NUL".into()))
}

fn config(options: &AfsOptions) -> SolverConfig {
    SolverConfig {
        tie_break: match options.tie_break {
            AfsTieBreak::SmallestLabel => TieBreak::SmallestLabel,
            AfsTieBreak::SmallestAbsPivot => TieBreak::SmallestAbsPivot,
            AfsTieBreak::LargestAbsPivot => TieBreak::LargestAbsPivot,
        },
        limits: Limits {
            max_iterations: (options.max_iterations > 0).then_some(options.max_iterations),
            ..Limits::default()
        },
        conjugate_slack_trick: options.conjugate_slack_trick,
        ..SolverConfig::default()
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn afs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn afs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn afs_options_default() -> AfsOptions {
    AfsOptions {
        method: AfsMethod::ArtificialFree,
        tie_break: AfsTieBreak::SmallestLabel,
        max_iterations: 0,
        conjugate_slack_trick: false,
    }
}

/// Parses LP text into a new problem handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn afs_problem_parse(text: *const c_char, out: *mut *mut AfsProblem) -> AfsError {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null(if text.is_null() { "text" } else { "out" }));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(AfsError::InvalidUtf8, e.to_string()))?;
        let inner = standardize(&parse_lp(text)?)?;
        store(out, Box::into_raw(Box::new(AfsProblem { inner })), "out")
    })
}

/// Builds a problem `max c·x, A x <= b, x >= 0` from integer data; `a` is
/// row-major with `rows * cols` entries.
///
/// # Safety
/// `a`, `b`, `c` must point to `rows * cols`, `rows` and `cols` readable
/// values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn afs_problem_from_dense(
    rows: size_t,
    cols: size_t,
    a: *const i64,
    b: *const i64,
    c: *const i64,
    out: *mut *mut AfsProblem,
) -> AfsError {
    guard(|| {
        if rows == 0 || cols == 0 {
            return Err(Failure(
                AfsError::InvalidArgument,
                "rows and cols must be positive".into(),
            ));
        }
        if a.is_null() || b.is_null() || c.is_null() {
            return Err(null("coefficient array"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Failure(AfsError::InvalidArgument, "dimensions overflow".into()))?;
        let a = std::slice::from_raw_parts(a, len);
        let matrix: Vec<&[i64]> = a.chunks(cols).collect();
        let inner = StandardProblem::from_integers(
            &matrix,
            std::slice::from_raw_parts(b, rows),
            std::slice::from_raw_parts(c, cols),
        )?;
        store(out, Box::into_raw(Box::new(AfsProblem { inner })), "out")
    })
}

/// # Safety
/// `problem` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn afs_problem_free(problem: *mut AfsProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Number of standard-form rows and structural columns.
///
/// # Safety
/// `problem` must be a live handle; `rows` and `cols` writable.
#[no_mangle]
pub unsafe extern "C" fn afs_problem_dimensions(
    problem: *const AfsProblem,
    rows: *mut size_t,
    cols: *mut size_t,
) -> AfsError {
    guard(|| {
        let p = &borrow(problem, "problem")?.inner;
        store(rows, p.rows(), "rows")?;
        store(cols, p.cols(), "cols")
    })
}

/// Solves in exact rational arithmetic. `options` may be null for defaults.
///
/// # Safety
/// `problem` must be a live handle, `options` null or readable, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn afs_solve(
    problem: *const AfsProblem,
    options: *const AfsOptions,
    out: *mut *mut AfsOutcome,
) -> AfsError {
    guard(|| {
        let p = &borrow(problem, "problem")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let options = options.as_ref().copied().unwrap_or_else(|| afs_options_default());
        let method = match options.method {
            AfsMethod::ArtificialFree => Phase1Method::ArtificialFree,
            AfsMethod::Traditional => Phase1Method::Traditional,
        };
        let inner = solve::<BigRational>(p, method, &config(&options))?;
        store(out, Box::into_raw(Box::new(AfsOutcome { inner })), "out")
    })
}

/// Runs both phase 1 methods and writes the comparison report as JSON.
///
/// # Safety
/// `problem` must be a live handle, `options` null or readable, `json`
/// writable. The string must be released with [`afs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn afs_compare_json(
    problem: *const AfsProblem,
    options: *const AfsOptions,
    json: *mut *mut c_char,
) -> AfsError {
    guard(|| {
        let p = &borrow(problem, "problem")?.inner;
        if json.is_null() {
            return Err(null("json"));
        }
        let options = options.as_ref().copied().unwrap_or_else(|| afs_options_default());
        let report = compare::<BigRational>(p, &config(&options))?;
        store(json, to_c_string(emit_comparison_json(&report))?, "json")
    })
}

/// # Safety
/// `outcome` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_free(outcome: *mut AfsOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// # Safety
/// `outcome` must be a live handle and `status` writable.
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_status(outcome: *const AfsOutcome, status: *mut AfsSolveStatus) -> AfsError {
    guard(|| {
        let o = &borrow(outcome, "outcome")?.inner;
        let s = match o.status {
            SolveStatus::Optimal => AfsSolveStatus::Optimal,
            SolveStatus::Infeasible => AfsSolveStatus::Infeasible,
            SolveStatus::Unbounded => AfsSolveStatus::Unbounded,
            SolveStatus::CycleDetected => AfsSolveStatus::CycleDetected,
            SolveStatus::IterationLimit => AfsSolveStatus::IterationLimit,
        };
        store(status, s, "status")
    })
}

/// Objective value in the problem's own sense, as exact text (`"36"`,
/// `"-9/2"`). Fails with `NoValue` when phase 1 did not reach feasibility.
///
/// # Safety
/// `outcome` must be a live handle and `text` writable. Release the string
/// with [`afs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_objective(outcome: *const AfsOutcome, text: *mut *mut c_char) -> AfsError {
    guard(|| {
        let o = &borrow(outcome, "outcome")?.inner;
        let z = o
            .objective
            .as_ref()
            .ok_or_else(|| Failure(AfsError::NoValue, "no objective value".into()))?;
        if text.is_null() {
            return Err(null("text"));
        }
        store(text, to_c_string(z.to_string())?, "text")
    })
}

/// Value of structural variable `index` (0-based) as a double.
///
/// # Safety
/// `outcome` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_variable(outcome: *const AfsOutcome, index: size_t, value: *mut f64) -> AfsError {
    guard(|| {
        let o = &borrow(outcome, "outcome")?.inner;
        let x = o
            .solution
            .as_ref()
            .ok_or_else(|| Failure(AfsError::NoValue, "no solution".into()))?;
        let v = x
            .get(index)
            .ok_or_else(|| Failure(AfsError::IndexOutOfRange, format!("variable {index} of {}", x.len())))?;
        store(value, v.to_f64().unwrap_or(f64::NAN), "value")
    })
}

/// Phase 1 pivot counts.
///
/// # Safety
/// `outcome` must be a live handle; `pivots` and `degenerate` writable.
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_phase1_pivots(
    outcome: *const AfsOutcome,
    pivots: *mut size_t,
    degenerate: *mut size_t,
) -> AfsError {
    guard(|| {
        let o = &borrow(outcome, "outcome")?.inner;
        store(pivots, o.phase1.pivots(), "pivots")?;
        store(degenerate, o.phase1.degenerate_pivots(), "degenerate")
    })
}

/// Full outcome (solution, traces, certificates) as JSON.
///
/// # Safety
/// `outcome` must be a live handle and `json` writable. Release the string
/// with [`afs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn afs_outcome_json(outcome: *const AfsOutcome, json: *mut *mut c_char) -> AfsError {
    guard(|| {
        let o = &borrow(outcome, "outcome")?.inner;
        if json.is_null() {
            return Err(null("json"));
        }
        store(json, to_c_string(emit_outcome_json(o))?, "json")
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn afs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
