//! C ABI for `scrollink`.
//!
//! Scrolls, parameter tuples and Hilbert profiles are opaque handles that
//! the caller creates with `sl_*_new` and releases with the matching
//! `sl_*_free`. Every fallible call returns an [`SlStatus`]; on failure the
//! message is available from [`sl_last_error`] on the same thread until the
//! next failing call. Outputs are written through caller-provided pointers
//! and are left untouched on failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use scrollink::emit::classification_record;
use scrollink::hilbert::{self, HilbertProfile, MaxGenusParams};
use scrollink::{chow, classification, expr, linkage, transforms, Error, ResolvedClass, ScrollType};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    /// A documented precondition was violated.
    Precondition = 2,
    /// An internal identity failed; indicates a bug.
    Consistency = 3,
    /// A divisor expression did not parse.
    Parse = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

pub struct SlScroll(ScrollType);
pub struct SlParams(MaxGenusParams);
pub struct SlProfile(HilbertProfile);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlClass {
    pub h: i64,
    pub r: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlScrollInfo {
    pub dim: i64,
    pub degree: i64,
    pub embedding_dim: i64,
    /// -1 when smooth.
    pub vertex_dim: i64,
    /// True when `H ~ f·R` and the class group is cyclic.
    pub cyclic_class_group: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlParamsView {
    pub d: i64,
    pub n: i64,
    pub s: i64,
    pub m: i64,
    pub eps: i64,
    pub w: i64,
    pub v: i64,
    pub k: i64,
    pub delta: i64,
    pub e: i64,
    pub in_asymptotic_range: bool,
    pub planar_residual_range: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlCurve {
    pub degree: i64,
    pub genus: i64,
    pub ruling_degree: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlRational {
    pub num: i64,
    pub den: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::Precondition { .. } => SlStatus::Precondition,
        Error::Consistency(_) => SlStatus::Consistency,
        Error::Parse { .. } => SlStatus::Parse,
    }
}

impl From<Error> for SlStatus {
    fn from(e: Error) -> Self {
        let s = status_of(&e);
        set_error(e.to_string());
        s
    }
}

fn null(what: &str) -> SlStatus {
    set_error(format!("{what} is null"));
    SlStatus::NullPointer
}

/// Runs `f`, converting panics into `SlStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), SlStatus>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SlStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside scrollink".to_string());
            SlStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), SlStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, SlStatus> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// Message of the last failure on this thread, or NULL. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `degrees` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_scroll_new(degrees: *const i64, len: usize, out: *mut *mut SlScroll) -> SlStatus {
    guard(|| {
        if degrees.is_null() && len > 0 {
            return Err(null("degrees"));
        }
        let slice = if len == 0 { &[][..] } else { unsafe { std::slice::from_raw_parts(degrees, len) } };
        let scroll = ScrollType::new(slice)?;
        unsafe { write(out, Box::into_raw(Box::new(SlScroll(scroll))), "out") }
    })
}

/// # Safety
/// `scroll` must come from `sl_scroll_new` and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_scroll_free(scroll: *mut SlScroll) {
    if !scroll.is_null() {
        drop(unsafe { Box::from_raw(scroll) });
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_scroll_info(scroll: *const SlScroll, out: *mut SlScrollInfo) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let info = SlScrollInfo {
            dim: x.dim(),
            degree: x.degree(),
            embedding_dim: x.embedding_dim(),
            vertex_dim: x.vertex_dim(),
            cyclic_class_group: x.class_group() == scrollink::ClassGroup::CyclicHisFR,
        };
        unsafe { write(out, info, "out") }
    })
}

/// Canonical representative of the Weil class `h·H + r·R`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_scroll_normalize_class(scroll: *const SlScroll, class: SlClass, out: *mut SlClass) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let c = x.normalize_class(scrollink::AmbientClass::new(class.h, class.r));
        unsafe { write(out, SlClass { h: c.h, r: c.rr }, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_scroll_is_reflexive(scroll: *const SlScroll, a: i64, b: i64, out: *mut bool) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let v = x.is_reflexive(a, b)?;
        unsafe { write(out, v, "out") }
    })
}

/// Intersection number of `len` resolved classes `h·H̃ + r·R̃`.
///
/// # Safety
/// `classes` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn sl_intersect(
    scroll: *const SlScroll,
    classes: *const SlClass,
    len: usize,
    out: *mut i64,
) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        if classes.is_null() && len > 0 {
            return Err(null("classes"));
        }
        let slice = if len == 0 { &[][..] } else { unsafe { std::slice::from_raw_parts(classes, len) } };
        let cs: Vec<ResolvedClass> = slice.iter().map(|c| ResolvedClass::new(c.h, c.r)).collect();
        let v = chow::intersect(x, &cs)?;
        unsafe { write(out, v, "out") }
    })
}

/// Evaluates a product expression such as `(2H+R)*H*H`.
///
/// # Safety
/// `expression` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sl_intersect_expr(scroll: *const SlScroll, expression: *const c_char, out: *mut i64) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        if expression.is_null() {
            return Err(null("expression"));
        }
        let text = unsafe { CStr::from_ptr(expression) }.to_str().map_err(|e| {
            set_error(format!("expression is not UTF-8: {e}"));
            SlStatus::InvalidUtf8
        })?;
        let v = expr::evaluate(x, text)?;
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_ci_invariants(scroll: *const SlScroll, a: i64, b: i64, out: *mut SlCurve) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let ci = chow::ci_invariants(x, a, b)?;
        unsafe { write(out, SlCurve { degree: ci.degree, genus: ci.genus, ruling_degree: ci.ruling_degree }, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_total_transform(scroll: *const SlScroll, d: i64, out: *mut SlClass) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let c = transforms::total_transform(x, d)?;
        unsafe { write(out, SlClass { h: c.h, r: c.rr }, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_proper_transform(scroll: *const SlScroll, cut_degree: i64, mult: i64, out: *mut SlClass) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let c = transforms::proper_transform_through_vertex(x, cut_degree, mult)?;
        unsafe { write(out, SlClass { h: c.h, r: c.rr }, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_vertex_multiplicity_ci(
    scroll: *const SlScroll,
    deg1: i64,
    mult1: i64,
    deg2: i64,
    mult2: i64,
    out: *mut i64,
) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let v = transforms::vertex_multiplicity_ci(x, deg1, mult1, deg2, mult2)?;
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_vertex_multiplicity_in_ruling_plane(
    scroll: *const SlScroll,
    deg1: i64,
    mult1: i64,
    out: *mut i64,
) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let v = transforms::vertex_multiplicity_in_ruling_plane(x, deg1, mult1)?;
        unsafe { write(out, v, "out") }
    })
}

/// Genus of the curve linked to `known` by a complete intersection of type `(a, b)`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_link_genus(
    scroll: *const SlScroll,
    a: i64,
    b: i64,
    known: SlCurve,
    unknown_degree: i64,
    unknown_ruling: i64,
    out: *mut SlCurve,
) -> SlStatus {
    guard(|| {
        let x = &unsafe { deref(scroll, "scroll") }?.0;
        let k = linkage::CurveInvariants::new(known.degree, known.genus, known.ruling_degree);
        let c = linkage::link_genus(x, a, b, k, unknown_degree, unknown_ruling)?.curve;
        unsafe { write(out, SlCurve { degree: c.degree, genus: c.genus, ruling_degree: c.ruling_degree }, "out") }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_params_new(d: i64, n: i64, s: i64, out: *mut *mut SlParams) -> SlStatus {
    guard(|| {
        let p = hilbert::decompose(d, n, s)?;
        unsafe { write(out, Box::into_raw(Box::new(SlParams(p))), "out") }
    })
}

/// # Safety
/// `params` must come from `sl_params_new`. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_params_free(params: *mut SlParams) {
    if !params.is_null() {
        drop(unsafe { Box::from_raw(params) });
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_params_view(params: *const SlParams, out: *mut SlParamsView) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        let view = SlParamsView {
            d: p.d,
            n: p.n,
            s: p.s,
            m: p.m,
            eps: p.eps,
            w: p.w,
            v: p.v,
            k: p.k,
            delta: p.delta,
            e: p.e,
            in_asymptotic_range: p.in_asymptotic_range,
            planar_residual_range: p.planar_residual_range,
        };
        unsafe { write(out, view, "out") }
    })
}

/// `Δh(r)` of the extremal profile.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_delta_h(params: *const SlParams, r: i64, out: *mut i64) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        unsafe { write(out, hilbert::delta_h(p, r), "out") }
    })
}

/// Maximal genus bound from the profile.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_genus_bound(params: *const SlParams, out: *mut i64) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        let g = hilbert::genus_from_profile(p)?;
        unsafe { write(out, g, "out") }
    })
}

/// The literal closed-form expression, as a reduced fraction.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_genus_closed_form(params: *const SlParams, out: *mut SlRational) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        let r = hilbert::closed_form_value(p);
        unsafe { write(out, SlRational { num: *r.numer(), den: *r.denom() }, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_h0_residual(params: *const SlParams, i: i64, out: *mut i64) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        let v = hilbert::h0_residual(p, i)?;
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_new(params: *const SlParams, out: *mut *mut SlProfile) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(params, "params") }?.0;
        let prof = hilbert::profile(p)?;
        unsafe { write(out, Box::into_raw(Box::new(SlProfile(prof))), "out") }
    })
}

/// Profile from an explicit `Δh` sequence.
///
/// # Safety
/// `deltas` must point to `len` readable integers.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_from_deltas(deltas: *const i64, len: usize, out: *mut *mut SlProfile) -> SlStatus {
    guard(|| {
        if deltas.is_null() && len > 0 {
            return Err(null("deltas"));
        }
        let slice = if len == 0 { &[][..] } else { unsafe { std::slice::from_raw_parts(deltas, len) } };
        let prof = HilbertProfile::from_deltas(slice.to_vec())?;
        unsafe { write(out, Box::into_raw(Box::new(SlProfile(prof))), "out") }
    })
}

/// # Safety
/// `profile` must come from `sl_profile_new`. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_free(profile: *mut SlProfile) {
    if !profile.is_null() {
        drop(unsafe { Box::from_raw(profile) });
    }
}

/// Number of stored `Δh` entries; 0 for NULL.
///
/// # Safety
/// `profile` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_len(profile: *const SlProfile) -> usize {
    unsafe { profile.as_ref() }.map_or(0, |p| p.0.deltas().len())
}

/// Copies up to `cap` entries of `Δh` into `buf` and stores the full length in `len_out`.
///
/// # Safety
/// `buf` must have room for `cap` integers.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_deltas(profile: *const SlProfile, buf: *mut i64, cap: usize, len_out: *mut usize) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(profile, "profile") }?.0;
        let deltas = p.deltas();
        let n = deltas.len().min(cap);
        if n > 0 {
            if buf.is_null() {
                return Err(null("buf"));
            }
            unsafe { ptr::copy_nonoverlapping(deltas.as_ptr(), buf, n) };
        }
        unsafe { write(len_out, deltas.len(), "len_out") }
    })
}

/// Hilbert function `h(k)`, mass, `h^1(I_Z(k))` and ACM genus of a profile.
///
/// # Safety
/// Output pointers may be NULL to skip a value; `profile` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_profile_query(
    profile: *const SlProfile,
    k: i64,
    cumulative: *mut i64,
    mass: *mut i64,
    h1: *mut i64,
    genus: *mut i64,
) -> SlStatus {
    guard(|| {
        let p = &unsafe { deref(profile, "profile") }?.0;
        for (out, v) in [(cumulative, p.cumulative(k)), (mass, p.mass()), (h1, p.h1_points(k)), (genus, p.acm_genus())] {
            if !out.is_null() {
                unsafe { out.write(v) };
            }
        }
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_closure(d: i64, n: i64, s: i64, out: *mut bool) -> SlStatus {
    guard(|| {
        let c = classification::verify_closure(d, n, s)?;
        unsafe { write(out, c.ok, "out") }
    })
}

/// Classification report as a JSON object (sorted keys). Free with `sl_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_classify_json(d: i64, n: i64, s: i64, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let report = classification::classify(d, n, s)?;
        let text = classification_record(&report).to_json_value().to_string();
        let c = CString::new(text).expect("JSON has no NUL bytes");
        unsafe { write(out, c.into_raw(), "out") }
    })
}

/// # Safety
/// `s` must come from this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_clebsch(degree: i64, out: *mut i64) -> SlStatus {
    guard(|| {
        let v = linkage::clebsch(degree)?;
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_noether_union(p1: i64, p2: i64, t: i64, out: *mut i64) -> SlStatus {
    guard(|| {
        let v = linkage::noether_union(p1, p2, t)?;
        unsafe { write(out, v, "out") }
    })
}
