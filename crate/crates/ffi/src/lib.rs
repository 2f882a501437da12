//! C ABI over `zk3-core`.
//!
//! Every fallible function returns a [`Zk3Status`]; on failure the message
//! is available from [`zk3_last_error`] until the next call on the same
//! thread. Strings handed out by this library must be released with
//! [`zk3_string_free`], lattices with [`zk3_lattice_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use zk3_core::lattice::{artin_bound, artin_bound_adjusted, IntegralLattice};
use zk3_core::quat::{quat_mul, CurveKind, OrderCase, QuatElement};
use zk3_core::repro::{any_failed, emit_report, run_claims, Format, RunOptions};
use zk3_core::{Error, RatMatrix};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zk3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Singular = 4,
    PrimeDividesDiscriminant = 5,
    InadmissiblePrime = 6,
    UnknownClaim = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zk3Case {
    J0 = 0,
    J1728 = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zk3Format {
    Json = 0,
    Markdown = 1,
    Tsv = 2,
}

/// Opaque lattice handle.
pub struct Zk3Lattice {
    inner: IntegralLattice,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> Zk3Status {
    match e {
        Error::Singular => Zk3Status::Singular,
        Error::PrimeDividesDiscriminant { .. } => Zk3Status::PrimeDividesDiscriminant,
        Error::InadmissiblePrime { .. } => Zk3Status::InadmissiblePrime,
        Error::UnknownClaim(_) => Zk3Status::UnknownClaim,
        Error::Internal(_) => Zk3Status::Internal,
        _ => Zk3Status::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (Zk3Status, String)>) -> Zk3Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Zk3Status::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside zk3".into());
            Zk3Status::Panic
        }
    }
}

fn core<T>(r: zk3_core::Result<T>) -> Result<T, (Zk3Status, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (Zk3Status, String) {
    (Zk3Status::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (Zk3Status, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (Zk3Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_str(out: *mut *mut c_char, s: String) -> Result<(), (Zk3Status, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (Zk3Status::Internal, "interior nul in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn lattice_ref<'a>(l: *const Zk3Lattice) -> Result<&'a IntegralLattice, (Zk3Status, String)> {
    l.as_ref().map(|l| &l.inner).ok_or_else(|| null("lattice"))
}

/// Builds a lattice from a row-major `rank × rank` Gram matrix.
///
/// # Safety
/// `entries` must point to `rank * rank` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_from_gram(
    entries: *const i64,
    rank: usize,
    out: *mut *mut Zk3Lattice,
) -> Zk3Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if entries.is_null() && rank > 0 {
            return Err(null("entries"));
        }
        let flat = if rank == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(entries, rank * rank)
        };
        let rows: Vec<Vec<i64>> = flat.chunks(rank.max(1)).map(<[i64]>::to_vec).collect();
        let gram = core(RatMatrix::from_i64_rows(&rows))?;
        let inner = core(IntegralLattice::new("gram", gram))?;
        *out = Box::into_raw(Box::new(Zk3Lattice { inner }));
        Ok(())
    })
}

/// Parses `{"label": ..., "rank": ..., "gram": [[...]]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_from_json(json: *const c_char, out: *mut *mut Zk3Lattice) -> Zk3Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let inner = core(IntegralLattice::from_json_str(text))?;
        *out = Box::into_raw(Box::new(Zk3Lattice { inner }));
        Ok(())
    })
}

/// # Safety
/// `lattice` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_free(lattice: *mut Zk3Lattice) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_rank(lattice: *const Zk3Lattice, out: *mut usize) -> Zk3Status {
    guard(|| {
        let l = lattice_ref(lattice)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = l.rank();
        Ok(())
    })
}

/// Discriminant as a decimal string.
///
/// # Safety
/// Pointers must be valid; free the result with `zk3_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_discriminant(lattice: *const Zk3Lattice, out: *mut *mut c_char) -> Zk3Status {
    guard(|| {
        let l = lattice_ref(lattice)?;
        let d = core(l.discriminant())?;
        write_str(out, d.to_string())
    })
}

/// Discriminant group as text, e.g. `Z/2 + Z/14` (`0` when trivial).
///
/// # Safety
/// Pointers must be valid; free the result with `zk3_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_discriminant_group(
    lattice: *const Zk3Lattice,
    out: *mut *mut c_char,
) -> Zk3Status {
    guard(|| {
        let l = lattice_ref(lattice)?;
        let g = core(l.discriminant_group())?;
        write_str(out, g.to_string())
    })
}

/// `⌊(22 − n)/2⌋`; fails with `PrimeDividesDiscriminant` when `p | disc`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zk3_lattice_artin_bound(lattice: *const Zk3Lattice, p: u64, out: *mut u32) -> Zk3Status {
    guard(|| {
        let l = lattice_ref(lattice)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = core(artin_bound(l, p))?;
        Ok(())
    })
}

/// Bound on the Artin invariant allowing `p | disc`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zk3_artin_bound_adjusted(rank: usize, disc: i64, p: u64, out: *mut u32) -> Zk3Status {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = core(artin_bound_adjusted(rank, &BigInt::from(disc), p))?;
        Ok(())
    })
}

/// Product of two order elements written as `a,b,c,d` (rationals allowed).
///
/// # Safety
/// Strings must be nul-terminated; free the result with `zk3_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zk3_quat_mul(
    case: Zk3Case,
    p: u64,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> Zk3Status {
    guard(|| {
        let kind = match case {
            Zk3Case::J0 => CurveKind::J0,
            Zk3Case::J1728 => CurveKind::J1728,
        };
        let c = core(OrderCase::new(kind, p))?;
        let a = core(QuatElement::parse(c, read_str(x, "x")?))?;
        let b = core(QuatElement::parse(c, read_str(y, "y")?))?;
        let prod = core(quat_mul(&a, &b))?;
        write_str(out, prod.to_string())
    })
}

/// Runs the claim registry. `filter` may be null (all claims); `primes` may
/// be null when `n_primes` is 0 (default primes). `any_failed_out` receives 1
/// if some claim failed.
///
/// # Safety
/// Pointers must be valid; free the report with `zk3_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zk3_repro_run(
    filter: *const c_char,
    primes: *const u64,
    n_primes: usize,
    format: Zk3Format,
    out: *mut *mut c_char,
    any_failed_out: *mut i32,
) -> Zk3Status {
    guard(|| {
        let filter = if filter.is_null() {
            None
        } else {
            Some(read_str(filter, "filter")?.to_string())
        };
        let primes = match (primes.is_null(), n_primes) {
            (_, 0) => None,
            (true, _) => return Err(null("primes")),
            (false, n) => Some(std::slice::from_raw_parts(primes, n).to_vec()),
        };
        let reports = core(run_claims(&RunOptions { filter, primes }))?;
        let fmt = match format {
            Zk3Format::Json => Format::Json,
            Zk3Format::Markdown => Format::Markdown,
            Zk3Format::Tsv => Format::Tsv,
        };
        let text = core(emit_report(&reports, fmt))?;
        if !any_failed_out.is_null() {
            *any_failed_out = i32::from(any_failed(&reports));
        }
        write_str(out, text)
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn zk3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn zk3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
