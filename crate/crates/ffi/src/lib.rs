//! C ABI for the `grigorchuk` crate.
//!
//! Objects are exposed as opaque handles created by `*_parse` / `*_act`
//! functions and released with the matching `*_free`. Every fallible call
//! returns a [`GrgStatus`]; on failure [`grg_last_error`] describes the
//! problem. Strings returned through `char **` out-parameters belong to the
//! caller and must be released with [`grg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grigorchuk::export::{GraphFormat, SchreierBall};
use grigorchuk::stabilizers::ElementBall;
use grigorchuk::{CubeVertex, Error, GroupElement, OmegaSequence, Ray, StabilizerTarget, WordSolver};

/// A defining sequence ω.
pub struct GrgOmega(OmegaSequence);

/// An element of `G_ω`, stored as a reduced word.
pub struct GrgElement(GroupElement);

/// A vertex of the cube complex.
pub struct GrgVertex(CubeVertex);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidOmega = 3,
    InvalidWord = 4,
    InvalidRay = 5,
    InvalidVertex = 6,
    OmegaMismatch = 7,
    NotRepetitionFree = 8,
    Unsupported = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrgFormat {
    Dot = 0,
    Jsonl = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrgTarget {
    GammaPlus = 0,
    GammaPlusTilde = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> GrgStatus {
    match error {
        Error::InvalidOmega { .. } => GrgStatus::InvalidOmega,
        Error::InvalidWord(_) => GrgStatus::InvalidWord,
        Error::InvalidRay(_) => GrgStatus::InvalidRay,
        Error::InvalidVertex(_) => GrgStatus::InvalidVertex,
        Error::OmegaMismatch { .. } => GrgStatus::OmegaMismatch,
        Error::NotRepetitionFree(_) => GrgStatus::NotRepetitionFree,
        _ => GrgStatus::Unsupported,
    }
}

struct Failure(GrgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GrgStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GrgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GrgStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            GrgStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(GrgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|_| Failure(GrgStatus::Panic, "string contains nul".into()))?;
    write(out, s.into_raw())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn grg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `pre:period`, e.g. `":012"`.
///
/// # Safety
/// `text` must be a nul-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn grg_omega_parse(text: *const c_char, out: *mut *mut GrgOmega) -> GrgStatus {
    guard(|| {
        let omega: OmegaSequence = read_str(text, "text")?.parse()?;
        write(out, boxed(GrgOmega(omega)))
    })
}

/// # Safety
/// `omega` must be NULL or a handle from [`grg_omega_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grg_omega_free(omega: *mut GrgOmega) {
    free(omega)
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_omega_is_repetition_free(omega: *const GrgOmega, out: *mut bool) -> GrgStatus {
    guard(|| write(out, borrow(omega, "omega")?.0.is_repetition_free()))
}

/// Normal form `pre:period`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_omega_to_string(omega: *const GrgOmega, out: *mut *mut c_char) -> GrgStatus {
    guard(|| write_string(out, borrow(omega, "omega")?.0.to_string()))
}

/// Parses a word over `{a, b, c, d}` (`""` or `"1"` for the identity) as an element of `G_ω`.
///
/// # Safety
/// Pointers must be valid, `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn grg_element_parse(
    omega: *const GrgOmega,
    word: *const c_char,
    out: *mut *mut GrgElement,
) -> GrgStatus {
    guard(|| {
        let g = GroupElement::parse_word(&borrow(omega, "omega")?.0, read_str(word, "word")?)?;
        write(out, boxed(GrgElement(g)))
    })
}

/// # Safety
/// `element` must be NULL or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn grg_element_free(element: *mut GrgElement) {
    free(element)
}

/// Reduced word of the element.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_element_word(element: *const GrgElement, out: *mut *mut c_char) -> GrgStatus {
    guard(|| write_string(out, borrow(element, "element")?.0.word().to_string()))
}

/// Product `g·h` (apply `h` first).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_element_mul(
    g: *const GrgElement,
    h: *const GrgElement,
    out: *mut *mut GrgElement,
) -> GrgStatus {
    guard(|| {
        let product = borrow(g, "g")?.0.mul(&borrow(h, "h")?.0)?;
        write(out, boxed(GrgElement(product)))
    })
}

/// Whether the element is the identity of `G_ω`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_element_is_trivial(element: *const GrgElement, out: *mut bool) -> GrgStatus {
    guard(|| write(out, WordSolver::new().is_trivial(&borrow(element, "element")?.0)))
}

/// Whether two elements of the same `G_ω` are equal.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_element_equal(g: *const GrgElement, h: *const GrgElement, out: *mut bool) -> GrgStatus {
    guard(|| {
        let equal = WordSolver::new().equal(&borrow(g, "g")?.0, &borrow(h, "h")?.0)?;
        write(out, equal)
    })
}

/// Image of a ray of the orbit of `0^∞`, written as its digits (`"0inf"` for `0^∞`).
///
/// # Safety
/// Pointers must be valid, `ray` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn grg_element_apply(
    element: *const GrgElement,
    ray: *const c_char,
    out: *mut *mut c_char,
) -> GrgStatus {
    guard(|| {
        let x: Ray = read_str(ray, "ray")?.parse()?;
        write_string(out, borrow(element, "element")?.0.apply(&x).to_string())
    })
}

/// Parses a vertex: `"∅"` or `"v0"` for the base vertex, otherwise the
/// comma-separated rays where it differs from the base vertex.
///
/// # Safety
/// Pointers must be valid, `text` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn grg_vertex_parse(text: *const c_char, out: *mut *mut GrgVertex) -> GrgStatus {
    guard(|| {
        let v: CubeVertex = read_str(text, "text")?.parse()?;
        write(out, boxed(GrgVertex(v)))
    })
}

/// # Safety
/// `vertex` must be NULL or a live vertex handle.
#[no_mangle]
pub unsafe extern "C" fn grg_vertex_free(vertex: *mut GrgVertex) {
    free(vertex)
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_vertex_to_string(vertex: *const GrgVertex, out: *mut *mut c_char) -> GrgStatus {
    guard(|| write_string(out, borrow(vertex, "vertex")?.0.to_string()))
}

/// The vertex `g·v`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_vertex_act(
    vertex: *const GrgVertex,
    element: *const GrgElement,
    out: *mut *mut GrgVertex,
) -> GrgStatus {
    guard(|| {
        let image = borrow(vertex, "vertex")?.0.act(&borrow(element, "element")?.0);
        write(out, boxed(GrgVertex(image)))
    })
}

/// Combinatorial distance, the number of rays where the colourings differ.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_vertex_distance(v: *const GrgVertex, w: *const GrgVertex, out: *mut usize) -> GrgStatus {
    guard(|| write(out, borrow(v, "v")?.0.distance(&borrow(w, "w")?.0)))
}

/// The ball of radius `radius` around `0^∞` in the Schreier graph, as DOT or JSON lines.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_schreier_export(
    omega: *const GrgOmega,
    radius: usize,
    format: GrgFormat,
    out: *mut *mut c_char,
) -> GrgStatus {
    guard(|| {
        let format = match format {
            GrgFormat::Dot => GraphFormat::Dot,
            GrgFormat::Jsonl => GraphFormat::Jsonl,
        };
        write_string(out, SchreierBall::new(&borrow(omega, "omega")?.0, radius).render(format))
    })
}

/// Stabilizer of `Γ₊` or `Γ̃₊` among elements of length at most `max_len`:
/// its size and recognised type (`"D8"`, `"Z2xZ2"`, ...). `type_out` may be NULL.
/// Fails with `NOT_REPETITION_FREE` if ω has a repetition.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn grg_stabilizer(
    omega: *const GrgOmega,
    target: GrgTarget,
    max_len: usize,
    order_out: *mut usize,
    type_out: *mut *mut c_char,
) -> GrgStatus {
    guard(|| {
        let mut ball = ElementBall::enumerate(&borrow(omega, "omega")?.0, max_len)?;
        let target = match target {
            GrgTarget::GammaPlus => StabilizerTarget::GammaPlus,
            GrgTarget::GammaPlusTilde => StabilizerTarget::GammaPlusTilde,
        };
        let table = ball.stabilizer(&target);
        write(order_out, table.order())?;
        if !type_out.is_null() {
            write_string(type_out, table.group_type().to_string())?;
        }
        Ok(())
    })
}
