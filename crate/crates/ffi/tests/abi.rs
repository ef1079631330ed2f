use std::ffi::{c_char, CStr, CString};
use std::ptr;

use afsimplex_ffi::*;

const WORKED_LP: &str = "max: 3 x1 + 5 x2; c1: x1 <= 4; c2: x2 >= 6; c3: 3x1 + 2x2 >= 18; \
                         c4: x1 + x2 >= 8; c5: 5x1 + 4x2 >= 32;";

fn parse(text: &str) -> Result<*mut AfsProblem, (AfsError, String)> {
    let text = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    match unsafe { afs_problem_parse(text.as_ptr(), &mut p) } {
        AfsError::Ok => Ok(p),
        e => Err((e, last_error())),
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(afs_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn take_string(s: *mut c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { afs_string_free(s) };
    text
}

#[test]
fn solves_worked_example_through_handles() {
    let p = parse(WORKED_LP).unwrap();
    let (mut rows, mut cols) = (0, 0);
    assert_eq!(unsafe { afs_problem_dimensions(p, &mut rows, &mut cols) }, AfsError::Ok);
    assert_eq!((rows, cols), (5, 2));

    let mut options = afs_options_default();
    options.tie_break = AfsTieBreak::SmallestAbsPivot;
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { afs_solve(p, &options, &mut o) }, AfsError::Ok);

    let mut status = AfsSolveStatus::Optimal;
    assert_eq!(unsafe { afs_outcome_status(o, &mut status) }, AfsError::Ok);
    assert_eq!(status, AfsSolveStatus::Unbounded);

    let (mut pivots, mut degenerate) = (0, 0);
    assert_eq!(
        unsafe { afs_outcome_phase1_pivots(o, &mut pivots, &mut degenerate) },
        AfsError::Ok
    );
    assert_eq!((pivots, degenerate), (3, 0));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { afs_outcome_json(o, &mut json) }, AfsError::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(doc["status"], "unbounded");
    assert_eq!(doc["phase1"]["pivots"], 3);

    unsafe {
        afs_outcome_free(o);
        afs_problem_free(p);
    }
}

#[test]
fn traditional_method_and_compare() {
    let p = parse(WORKED_LP).unwrap();
    let mut options = afs_options_default();
    options.method = AfsMethod::Traditional;
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { afs_solve(p, &options, &mut o) }, AfsError::Ok);
    let (mut pivots, mut degenerate) = (0, 0);
    unsafe { afs_outcome_phase1_pivots(o, &mut pivots, &mut degenerate) };
    assert_eq!((pivots, degenerate), (5, 2));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { afs_compare_json(p, ptr::null(), &mut json) }, AfsError::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(doc["af"]["pivots"], 3);
    assert_eq!(doc["traditional"]["pivots"], 5);
    unsafe {
        afs_outcome_free(o);
        afs_problem_free(p);
    }
}

#[test]
fn dense_problem_with_exact_objective() {
    // max x1 + x2, x1 + 2 x2 <= 3, 2 x1 + x2 <= 3
    let a = [1i64, 2, 2, 1];
    let (b, c) = ([3i64, 3], [1i64, 1]);
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { afs_problem_from_dense(2, 2, a.as_ptr(), b.as_ptr(), c.as_ptr(), &mut p) },
        AfsError::Ok
    );
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { afs_solve(p, ptr::null(), &mut o) }, AfsError::Ok);
    let mut z = ptr::null_mut();
    assert_eq!(unsafe { afs_outcome_objective(o, &mut z) }, AfsError::Ok);
    assert_eq!(take_string(z), "2");
    let mut x = 0.0;
    assert_eq!(unsafe { afs_outcome_variable(o, 1, &mut x) }, AfsError::Ok);
    assert_eq!(x, 1.0);
    assert_eq!(unsafe { afs_outcome_variable(o, 2, &mut x) }, AfsError::IndexOutOfRange);
    assert!(last_error().contains("variable 2"));
    unsafe {
        afs_outcome_free(o);
        afs_problem_free(p);
    }
}

#[test]
fn infeasible_outcome_has_no_value() {
    let p = parse("max: x; a: x <= 1; b: x >= 2;").unwrap();
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { afs_solve(p, ptr::null(), &mut o) }, AfsError::Ok);
    let mut status = AfsSolveStatus::Optimal;
    unsafe { afs_outcome_status(o, &mut status) };
    assert_eq!(status, AfsSolveStatus::Infeasible);
    let mut z = ptr::null_mut();
    assert_eq!(unsafe { afs_outcome_objective(o, &mut z) }, AfsError::NoValue);
    assert!(z.is_null());
    let mut x = 0.0;
    assert_eq!(unsafe { afs_outcome_variable(o, 0, &mut x) }, AfsError::NoValue);
    unsafe {
        afs_outcome_free(o);
        afs_problem_free(p);
    }
}

#[test]
fn errors_set_codes_and_messages() {
    let (code, message) = parse("max: x;\nc1: x <> 1;").unwrap_err();
    assert_eq!(code, AfsError::Parse);
    assert!(message.starts_with("2:"), "{message}");
    assert_eq!(parse("max: x;").unwrap_err().0, AfsError::Parse);

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { afs_problem_parse(ptr::null(), &mut p) }, AfsError::NullPointer);
    let text = CString::new("max: x; c: x <= 1;").unwrap();
    assert_eq!(
        unsafe { afs_problem_parse(text.as_ptr(), ptr::null_mut()) },
        AfsError::NullPointer
    );
    let bad = [0x6du8, 0xff, 0];
    assert_eq!(
        unsafe { afs_problem_parse(bad.as_ptr().cast(), &mut p) },
        AfsError::InvalidUtf8
    );

    let mut o = ptr::null_mut();
    assert_eq!(
        unsafe { afs_solve(ptr::null(), ptr::null(), &mut o) },
        AfsError::NullPointer
    );
    assert_eq!(last_error(), "problem is null");
    assert_eq!(
        unsafe { afs_problem_from_dense(0, 1, ptr::null(), ptr::null(), ptr::null(), &mut p) },
        AfsError::InvalidArgument
    );

    // success clears the message
    let ok = parse("max: x; c: x <= 1;").unwrap();
    assert_eq!(last_error(), "");
    unsafe {
        afs_problem_free(ok);
        afs_problem_free(ptr::null_mut());
        afs_outcome_free(ptr::null_mut());
        afs_string_free(ptr::null_mut());
    }
}

#[test]
fn iteration_cap_is_reported() {
    let p = parse(WORKED_LP).unwrap();
    let mut options = afs_options_default();
    options.max_iterations = 1;
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { afs_solve(p, &options, &mut o) }, AfsError::Ok);
    let mut status = AfsSolveStatus::Optimal;
    unsafe { afs_outcome_status(o, &mut status) };
    assert_eq!(status, AfsSolveStatus::IterationLimit);
    unsafe {
        afs_outcome_free(o);
        afs_problem_free(p);
    }
}

#[test]
fn version_is_nonempty() {
    let v = unsafe { CStr::from_ptr(afs_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
