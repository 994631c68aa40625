//! C interface to `althecke`.
//!
//! Every fallible call returns an [`AhStatus`]. On failure a message is kept
//! per thread and can be read with [`ah_last_error`]. Strings returned by the
//! library are owned by the caller and must be released with
//! [`ah_string_free`]; handles with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use althecke::hecke_rep::{build_representation, Form, Representation};
use althecke::scalars::QPoint;
use althecke::tableaux::YoungDiagram;
use althecke::word_algebra::{RewritingEngine, YWord};
use althecke::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Inadmissible = 3,
    Indeterminate = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Which normalization of the generators to build.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AhForm {
    /// Hecke generators with g^2 = (q-1)g + q.
    G = 0,
    /// Involutions f = (2g - (q-1))/(q+1).
    F = 1,
    /// Orthogonal form of the symmetric group.
    Sym = 2,
}

/// Seminormal representation of the Hecke algebra.
pub struct AhRepresentation {
    inner: Representation,
}

/// Normal-form rewriting for words in the even generators.
pub struct AhEngine {
    inner: RewritingEngine,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: AhStatus, msg: impl Into<String>) -> AhStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> AhStatus {
    let status = match e {
        Error::Inadmissible { .. } | Error::Pole { .. } | Error::DivisionByZero => AhStatus::Inadmissible,
        Error::Indeterminate(_) => AhStatus::Indeterminate,
        Error::Parse(_) | Error::InvalidInput(_) => AhStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> AhStatus) -> AhStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(AhStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, AhStatus> {
    if p.is_null() {
        return Err(fail(AhStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(AhStatus::InvalidInput, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String, out: *mut *mut c_char) -> AhStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            AhStatus::Ok
        }
        Err(_) => fail(AhStatus::InvalidInput, "output contains a NUL byte"),
    }
}

/// Message describing the most recent failure on this thread, or null.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn ah_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ah_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the representation for `shape` (e.g. "3,1") at `q` (e.g. "5/7").
///
/// # Safety
/// `shape` and `q` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ah_representation_new(
    shape: *const c_char,
    q: *const c_char,
    form: AhForm,
    out: *mut *mut AhRepresentation,
) -> AhStatus {
    guard(|| {
        if out.is_null() {
            return fail(AhStatus::NullPointer, "out is null");
        }
        let (shape, q) = match (read_str(shape, "shape"), read_str(q, "q")) {
            (Ok(s), Ok(q)) => (s, q),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let result = shape.parse::<YoungDiagram>().and_then(|d| {
            let point = QPoint::parse(q, d.n())?;
            let form = match form {
                AhForm::G => Form::G,
                AhForm::F => Form::F,
                AhForm::Sym => Form::Sym,
            };
            build_representation(&d, &point, form)
        });
        match result {
            Ok(rep) => {
                *out = Box::into_raw(Box::new(AhRepresentation { inner: rep }));
                AhStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of standard tableaux of the shape, or 0 for null.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ah_representation_dim(rep: *const AhRepresentation) -> usize {
    rep.as_ref().map_or(0, |r| r.inner.dim())
}

/// Number of strands n, or 0 for null.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ah_representation_n(rep: *const AhRepresentation) -> usize {
    rep.as_ref().map_or(0, |r| r.inner.n())
}

/// Writes the matrix of generator `i` (1 <= i < n) row-major into `re` and
/// `im`, each of length at least `len` = dim * dim. `im` may be null.
///
/// # Safety
/// `rep` must be a live handle; `re` (and `im` if non-null) must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ah_representation_generator(
    rep: *const AhRepresentation,
    i: usize,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> AhStatus {
    guard(|| {
        let Some(rep) = rep.as_ref() else {
            return fail(AhStatus::NullPointer, "rep is null");
        };
        if re.is_null() {
            return fail(AhStatus::NullPointer, "re is null");
        }
        let rep = &rep.inner;
        if i == 0 || i >= rep.n() {
            return fail(AhStatus::OutOfRange, format!("generator {i} outside 1..{}", rep.n()));
        }
        let d = rep.dim();
        if len < d * d {
            return fail(AhStatus::OutOfRange, format!("buffer holds {len} entries, need {}", d * d));
        }
        let m = rep.generator(i);
        for r in 0..d {
            for c in 0..d {
                let z = m[(r, c)];
                *re.add(r * d + c) = z.re;
                if !im.is_null() {
                    *im.add(r * d + c) = z.im;
                }
            }
        }
        AhStatus::Ok
    })
}

/// # Safety
/// `rep` must be null or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ah_representation_free(rep: *mut AhRepresentation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Creates a rewriting engine for n >= 3 strands.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ah_engine_new(n: usize, out: *mut *mut AhEngine) -> AhStatus {
    guard(|| {
        if out.is_null() {
            return fail(AhStatus::NullPointer, "out is null");
        }
        match RewritingEngine::new(n) {
            Ok(e) => {
                *out = Box::into_raw(Box::new(AhEngine { inner: e }));
                AhStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Rewrites a word such as "y1 y2 y1" and returns its normal form as a JSON
/// array of `{monomial, word, coeff: {num, den}}` objects.
///
/// # Safety
/// `engine` must be a live handle, `word` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ah_engine_rewrite_json(
    engine: *const AhEngine,
    word: *const c_char,
    out: *mut *mut c_char,
) -> AhStatus {
    guard(|| {
        let Some(engine) = engine.as_ref() else {
            return fail(AhStatus::NullPointer, "engine is null");
        };
        if out.is_null() {
            return fail(AhStatus::NullPointer, "out is null");
        }
        let word = match read_str(word, "word") {
            Ok(w) => w,
            Err(s) => return s,
        };
        let engine = &engine.inner;
        let result = YWord::parse(word, engine.n()).and_then(|w| engine.rewrite(&w));
        match result {
            Ok(nf) => into_c_string(althecke::json::to_string(&althecke::json::combination(&nf)), out),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `engine` must be null or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ah_engine_free(engine: *mut AhEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Runs a command-line invocation (without the program name), e.g.
/// `{"classify", "--n", "4"}`. Stdout and stderr are returned as strings and
/// the exit code as the result (0 ok, 1 invalid input, 2 failed check,
/// 3 indeterminate). Returns -1 if an argument pointer is null.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; `out` and `err` must be
/// writable or null.
#[no_mangle]
pub unsafe extern "C" fn ah_run(
    argc: usize,
    argv: *const *const c_char,
    out: *mut *mut c_char,
    err: *mut *mut c_char,
) -> i32 {
    let mut args = vec!["althecke".to_string()];
    for k in 0..argc {
        let p = if argv.is_null() { ptr::null() } else { *argv.add(k) };
        match read_str(p, "argument") {
            Ok(s) => args.push(s.to_string()),
            Err(_) => return -1,
        }
    }
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = catch_unwind(AssertUnwindSafe(|| althecke::cli::run(args, &mut stdout, &mut stderr))).unwrap_or_else(|_| {
        stderr.extend_from_slice(b"internal panic\n");
        -1
    });
    for (buf, dst) in [(stdout, out), (stderr, err)] {
        if !dst.is_null() {
            let s = String::from_utf8_lossy(&buf).replace('\0', " ");
            *dst = CString::new(s).expect("NUL removed").into_raw();
        }
    }
    code
}
