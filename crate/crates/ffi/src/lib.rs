//! C ABI for `holderq`.
//!
//! Every function returns an [`HqStatus`]; results come back through out
//! pointers, which are left untouched on failure. Tuples are passed as a
//! pointer plus a length. Streams are opaque [`HqStream`] handles created by
//! [`hq_stream_new`] and released with [`hq_stream_free`].
//!
//! The header `include/holderq.h` is generated by cbindgen at build time.

use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::slice;

use holderq::rearrangement::PermutationBounds;
use holderq::{
    Error, Exponent, InequalityReport, PairedTuples, PositiveTuple, RatioStreamAccumulator, Verdict,
};

/// Status codes returned by every `hq_*` function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HqStatus {
    Ok = 0,
    /// Empty tuple, or an element that is not strictly positive and finite.
    InvalidInput = 1,
    LengthMismatch = 2,
    UndefinedAtZero = 3,
    InvalidExponent = 4,
    OutOfRange = 5,
    TooLarge = 6,
    EmptyStream = 7,
    Orientation = 8,
    NullPointer = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HqExponentTag {
    NegInf = 0,
    Finite = 1,
    Zero = 2,
    PosInf = 3,
}

/// Extended exponent; `value` is read only when `tag` is `FINITE`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HqExponent {
    pub tag: HqExponentTag,
    pub value: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HqVerdict {
    HoldsStrict = 0,
    EqualityN1 = 1,
    NearEquality = 2,
    Violated = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HqReport {
    pub p: HqExponent,
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub verdict: HqVerdict,
}

/// Opaque stream accumulator.
pub struct HqStream {
    inner: RatioStreamAccumulator,
}

impl From<&Error> for HqStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonPositive { .. } | Error::Empty | Error::TooShort { .. } => HqStatus::InvalidInput,
            Error::LengthMismatch { .. } => HqStatus::LengthMismatch,
            Error::UndefinedAtZero => HqStatus::UndefinedAtZero,
            Error::InvalidExponent(_) | Error::FiniteExponentRequired(_) => HqStatus::InvalidExponent,
            Error::OutOfRange => HqStatus::OutOfRange,
            Error::TooLarge { .. } => HqStatus::TooLarge,
            Error::EmptyStream => HqStatus::EmptyStream,
            Error::Orientation(_) => HqStatus::Orientation,
            Error::InvalidArgument(_) | Error::Parse(_) => HqStatus::InvalidInput,
        }
    }
}

impl TryFrom<HqExponent> for Exponent {
    type Error = Error;

    fn try_from(p: HqExponent) -> Result<Self, Error> {
        match p.tag {
            HqExponentTag::NegInf => Ok(Exponent::NegInf),
            HqExponentTag::Zero => Ok(Exponent::Zero),
            HqExponentTag::PosInf => Ok(Exponent::PosInf),
            HqExponentTag::Finite => Exponent::finite(p.value),
        }
    }
}

impl From<Exponent> for HqExponent {
    fn from(p: Exponent) -> Self {
        let (tag, value) = match p {
            Exponent::NegInf => (HqExponentTag::NegInf, f64::NEG_INFINITY),
            Exponent::Finite(v) => (HqExponentTag::Finite, v),
            Exponent::Zero => (HqExponentTag::Zero, 0.0),
            Exponent::PosInf => (HqExponentTag::PosInf, f64::INFINITY),
        };
        HqExponent { tag, value }
    }
}

impl From<Verdict> for HqVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::HoldsStrict => HqVerdict::HoldsStrict,
            Verdict::EqualityN1 => HqVerdict::EqualityN1,
            Verdict::NearEquality => HqVerdict::NearEquality,
            Verdict::Violated => HqVerdict::Violated,
        }
    }
}

impl From<InequalityReport> for HqReport {
    fn from(r: InequalityReport) -> Self {
        HqReport {
            p: r.p.into(),
            n: r.n,
            lhs: r.lhs,
            rhs: r.rhs,
            gap: r.gap,
            verdict: r.verdict.into(),
        }
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> Result<(), Fail> + UnwindSafe>(f: F) -> HqStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => HqStatus::Ok,
        Ok(Err(Fail::Null)) => HqStatus::NullPointer,
        Ok(Err(Fail::Lib(e))) => (&e).into(),
        Err(_) => HqStatus::Panic,
    }
}

/// # Safety
/// `ptr` must be null or point to `len` readable doubles.
unsafe fn tuple(ptr: *const f64, len: usize) -> Result<PositiveTuple, Fail> {
    if len == 0 {
        return Err(Error::Empty.into());
    }
    if ptr.is_null() {
        return Err(Fail::Null);
    }
    Ok(PositiveTuple::from_slice(slice::from_raw_parts(ptr, len))?)
}

/// # Safety
/// See [`tuple`], for both pointers.
unsafe fn pair(a: *const f64, b: *const f64, len: usize) -> Result<PairedTuples, Fail> {
    Ok(PairedTuples::new(tuple(a, len)?, tuple(b, len)?)?)
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    out.write(v);
    Ok(())
}

/// Human-readable name of a status code. The string is static.
#[no_mangle]
pub extern "C" fn hq_status_message(status: HqStatus) -> *const c_char {
    let s: &'static std::ffi::CStr = match status {
        HqStatus::Ok => c"ok",
        HqStatus::InvalidInput => c"invalid input: values must be strictly positive and finite, tuples nonempty",
        HqStatus::LengthMismatch => c"tuple lengths differ",
        HqStatus::UndefinedAtZero => c"single-tuple functional is undefined at p = 0",
        HqStatus::InvalidExponent => c"invalid exponent",
        HqStatus::OutOfRange => c"result outside floating-point range",
        HqStatus::TooLarge => c"instance too large for exhaustive enumeration",
        HqStatus::EmptyStream => c"stream is empty",
        HqStatus::Orientation => c"operation requires p > 0",
        HqStatus::NullPointer => c"null pointer argument",
        HqStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// `‖a‖_p`.
///
/// # Safety
/// `a` must point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_holder_functional(a: *const f64, n: usize, p: HqExponent, out: *mut f64) -> HqStatus {
    guard(|| {
        let v = holderq::holder_functional(&tuple(a, n)?, p.try_into()?)?;
        put(out, v)
    })
}

/// `ln Σ a_k^p` for a finite nonzero `p`.
///
/// # Safety
/// `a` must point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_log_power_sum(a: *const f64, n: usize, p: f64, out: *mut f64) -> HqStatus {
    guard(|| {
        let v = holderq::log_power_sum(&tuple(a, n)?, p)?;
        put(out, v)
    })
}

/// `‖a‖_p / ‖b‖_p`, including the limits at `p = 0, ±inf`.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_lhs_quotient(
    a: *const f64,
    b: *const f64,
    n: usize,
    p: HqExponent,
    out: *mut f64,
) -> HqStatus {
    guard(|| {
        let v = holderq::lhs_quotient(&pair(a, b, n)?, p.try_into()?)?;
        put(out, v)
    })
}

/// `Σ a_k / b_k`.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_rhs_ratio_sum(a: *const f64, b: *const f64, n: usize, out: *mut f64) -> HqStatus {
    guard(|| put(out, holderq::rhs_ratio_sum(&pair(a, b, n)?)?))
}

/// `(Π a_k / b_k)^{1/n}`.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_geometric_mean_ratio(a: *const f64, b: *const f64, n: usize, out: *mut f64) -> HqStatus {
    guard(|| put(out, holderq::geometric_mean_ratio(&pair(a, b, n)?)?))
}

/// Checks `‖a‖_p / ‖b‖_p < Σ a_k / b_k`. `tolerance` is the near-equality
/// band relative to the right side; pass a negative value for the default.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_check_main_inequality(
    a: *const f64,
    b: *const f64,
    n: usize,
    p: HqExponent,
    tolerance: f64,
    out: *mut HqReport,
) -> HqStatus {
    guard(|| {
        let tol = if tolerance < 0.0 { holderq::DEFAULT_TOLERANCE } else { tolerance };
        let r = holderq::check_main_inequality_with(&pair(a, b, n)?, p.try_into()?, tol)?;
        put(out, r.into())
    })
}

/// Geometric mean, arithmetic mean and sum of the ratios. Any of the out
/// pointers may be null.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; non-null outs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_am_gm_chain(
    a: *const f64,
    b: *const f64,
    n: usize,
    gm: *mut f64,
    am: *mut f64,
    sum: *mut f64,
) -> HqStatus {
    guard(|| {
        let c = holderq::am_gm_chain(&pair(a, b, n)?)?;
        for (ptr, v) in [(gm, c.gm), (am, c.am), (sum, c.sum)] {
            if !ptr.is_null() {
                ptr.write(v);
            }
        }
        Ok(())
    })
}

/// Relative residual of the two-entry merge identity.
///
/// # Safety
/// `a` must point to `n` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_merge_identity_residual(a: *const f64, n: usize, p: f64, out: *mut f64) -> HqStatus {
    guard(|| {
        let r = holderq::merge_identity_residual(&tuple(a, n)?, Exponent::finite(p)?)?;
        put(out, r)
    })
}

/// # Safety
/// Non-null permutation outputs must have room for `bounds.min_perm.len()`.
unsafe fn write_bounds(
    b: PermutationBounds,
    min_sum: *mut f64,
    max_sum: *mut f64,
    min_perm: *mut usize,
    max_perm: *mut usize,
) -> Result<(), Fail> {
    put(min_sum, b.min_sum)?;
    put(max_sum, b.max_sum)?;
    if !min_perm.is_null() {
        slice::from_raw_parts_mut(min_perm, b.min_perm.len()).copy_from_slice(&b.min_perm);
    }
    if !max_perm.is_null() {
        slice::from_raw_parts_mut(max_perm, b.max_perm.len()).copy_from_slice(&b.max_perm);
    }
    Ok(())
}

/// Extremal ratio sums by sorting. Permutations are 0-based: `a[k]` is
/// paired with `b[perm[k]]`. The permutation outputs may be null.
///
/// # Safety
/// `a` and `b` must each point to `n` doubles; sums must be writable;
/// non-null permutation outputs must hold `n` elements.
#[no_mangle]
pub unsafe extern "C" fn hq_extremal_ratio_sums(
    a: *const f64,
    b: *const f64,
    n: usize,
    min_sum: *mut f64,
    max_sum: *mut f64,
    min_perm: *mut usize,
    max_perm: *mut usize,
) -> HqStatus {
    guard(|| {
        let r = holderq::extremal_ratio_sums(&pair(a, b, n)?)?;
        write_bounds(r, min_sum, max_sum, min_perm, max_perm)
    })
}

/// Exhaustive version of [`hq_extremal_ratio_sums`] for `n <= 8`.
///
/// # Safety
/// As for [`hq_extremal_ratio_sums`].
#[no_mangle]
pub unsafe extern "C" fn hq_brute_force_extrema(
    a: *const f64,
    b: *const f64,
    n: usize,
    min_sum: *mut f64,
    max_sum: *mut f64,
    min_perm: *mut usize,
    max_perm: *mut usize,
) -> HqStatus {
    guard(|| {
        let r = holderq::brute_force_extrema(&pair(a, b, n)?)?;
        write_bounds(r, min_sum, max_sum, min_perm, max_perm)
    })
}

/// Creates a stream accumulator for a finite nonzero `p`. `tolerance < 0`
/// selects the default band.
///
/// # Safety
/// `out` must be writable. The handle must be released with
/// [`hq_stream_free`].
#[no_mangle]
pub unsafe extern "C" fn hq_stream_new(p: f64, tolerance: f64, out: *mut *mut HqStream) -> HqStatus {
    guard(|| {
        let tol = if tolerance < 0.0 { holderq::DEFAULT_TOLERANCE } else { tolerance };
        let inner = RatioStreamAccumulator::with_tolerance(Exponent::finite(p)?, tol)?;
        put(out, Box::into_raw(Box::new(HqStream { inner })))
    })
}

/// # Safety
/// `stream` must be a live handle from [`hq_stream_new`], not used
/// concurrently.
#[no_mangle]
pub unsafe extern "C" fn hq_stream_push(stream: *mut HqStream, a: f64, b: f64) -> HqStatus {
    guard(|| {
        let s = stream.as_mut().ok_or(Fail::Null)?;
        Ok(s.inner.push(a, b)?)
    })
}

/// Number of pairs pushed so far; 0 for a null handle.
///
/// # Safety
/// `stream` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hq_stream_count(stream: *const HqStream) -> usize {
    stream.as_ref().map_or(0, |s| s.inner.count())
}

/// Prefix check in the orientation fixed by the sign of `p`. `log_lhs` and
/// `log_rhs` (either may be null) receive `ln Σ a^p` and
/// `ln(Σ b^p · S^p)`.
///
/// # Safety
/// `stream` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hq_stream_check(
    stream: *const HqStream,
    out: *mut HqReport,
    log_lhs: *mut f64,
    log_rhs: *mut f64,
) -> HqStatus {
    guard(|| {
        let s = stream.as_ref().ok_or(Fail::Null)?;
        let c = s.inner.prefix_check()?;
        put(out, c.report.into())?;
        if !log_lhs.is_null() {
            log_lhs.write(c.log_lhs);
        }
        if !log_rhs.is_null() {
            log_rhs.write(c.log_rhs);
        }
        Ok(())
    })
}

/// Releases a stream handle. Null is ignored.
///
/// # Safety
/// `stream` must be null or a handle from [`hq_stream_new`] that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn hq_stream_free(stream: *mut HqStream) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}
