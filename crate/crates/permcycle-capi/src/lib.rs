//! C ABI for the permcycle library.
//!
//! Fields and constructions are opaque handles created and destroyed by
//! the `pc_*_free` functions; every fallible call returns a [`PcStatus`]
//! and writes its result through an out pointer. Strings returned by the
//! library are NUL-terminated and must be released with
//! [`pc_string_free`]. The generated header lives in `include/`.

use std::ffi::{c_char, CStr, CString};

use permcycle::{
    construct_bin, construct_cyclotomic, construct_geom_sum, construct_tri, verify_construction,
    verify_poly, Construction, Error, Field, FieldRef, SparsePoly,
};

/// Status codes mirroring the library's error set. `PC_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    PcOk = 0,
    PcErrNotPrime = 1,
    PcErrEvenCharacteristic = 2,
    PcErrReducibleModulus = 3,
    PcErrFieldMismatch = 4,
    PcErrZeroInverse = 5,
    PcErrZeroOrder = 6,
    PcErrZeroLog = 7,
    PcErrOrderNotDividing = 8,
    PcErrSyntax = 9,
    PcErrOddIndex = 10,
    PcErrEqualUnits = 11,
    PcErrUnitOutsideSubgroup = 12,
    PcErrAllUnitsEqual = 13,
    PcErrBadResidue = 14,
    PcErrIndexNotMultipleOf3 = 15,
    PcErrBadDivisibility = 16,
    PcErrOrderMismatch = 17,
    PcErrNotAPermutation = 18,
    PcErrNotCosetMultiplicative = 19,
    PcErrVerificationFailed = 20,
    PcErrBadElement = 21,
    PcErrBadParameter = 22,
    PcErrNullPointer = 100,
    PcErrInvalidUtf8 = 101,
}

fn status_of(e: &Error) -> PcStatus {
    match e {
        Error::NotPrime(_) => PcStatus::PcErrNotPrime,
        Error::EvenCharacteristic => PcStatus::PcErrEvenCharacteristic,
        Error::ReducibleModulus => PcStatus::PcErrReducibleModulus,
        Error::FieldMismatch => PcStatus::PcErrFieldMismatch,
        Error::ZeroInverse => PcStatus::PcErrZeroInverse,
        Error::ZeroOrder => PcStatus::PcErrZeroOrder,
        Error::ZeroLog => PcStatus::PcErrZeroLog,
        Error::OrderNotDividing(_) => PcStatus::PcErrOrderNotDividing,
        Error::SyntaxError(_) => PcStatus::PcErrSyntax,
        Error::OddIndex(_) => PcStatus::PcErrOddIndex,
        Error::EqualUnits => PcStatus::PcErrEqualUnits,
        Error::UnitOutsideSubgroup(_, _) => PcStatus::PcErrUnitOutsideSubgroup,
        Error::AllUnitsEqual => PcStatus::PcErrAllUnitsEqual,
        Error::BadResidue => PcStatus::PcErrBadResidue,
        Error::IndexNotMultipleOf3(_) => PcStatus::PcErrIndexNotMultipleOf3,
        Error::BadDivisibility(_) => PcStatus::PcErrBadDivisibility,
        Error::OrderMismatch => PcStatus::PcErrOrderMismatch,
        Error::NotAPermutation => PcStatus::PcErrNotAPermutation,
        Error::NotCosetMultiplicative => PcStatus::PcErrNotCosetMultiplicative,
        Error::VerificationFailed(_) => PcStatus::PcErrVerificationFailed,
        Error::BadElement(_) => PcStatus::PcErrBadElement,
        Error::BadParameter(_) => PcStatus::PcErrBadParameter,
    }
}

/// Opaque handle to a finite field.
pub struct PcField(FieldRef);

/// Opaque handle to a construction.
pub struct PcConstruction(Construction);

fn leak_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> PcStatus {
    if out.is_null() {
        return PcStatus::PcErrNullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    PcStatus::PcOk
}

/// Creates the prime field F_p.
#[no_mangle]
pub unsafe extern "C" fn pc_field_new_prime(p: u64, out: *mut *mut PcField) -> PcStatus {
    match Field::prime(p) {
        Ok(f) => unsafe { write_out(out, PcField(f)) },
        Err(e) => status_of(&e),
    }
}

/// Creates the extension field F_{p^k}. `modulus` may be NULL to select
/// the default modulus; otherwise it points to `modulus_len` ascending
/// coefficients (the leading 1 may be included or omitted).
#[no_mangle]
pub unsafe extern "C" fn pc_field_new_extension(
    p: u64,
    k: u32,
    modulus: *const u64,
    modulus_len: usize,
    out: *mut *mut PcField,
) -> PcStatus {
    let m = if modulus.is_null() {
        None
    } else {
        Some(unsafe { std::slice::from_raw_parts(modulus, modulus_len) }.to_vec())
    };
    match Field::extension(p, k, m) {
        Ok(f) => unsafe { write_out(out, PcField(f)) },
        Err(e) => status_of(&e),
    }
}

/// Creates F_q from its order by prime-power decomposition.
#[no_mangle]
pub unsafe extern "C" fn pc_field_from_order(q: u64, out: *mut *mut PcField) -> PcStatus {
    match Field::from_order(q) {
        Ok(f) => unsafe { write_out(out, PcField(f)) },
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn pc_field_free(field: *mut PcField) {
    if !field.is_null() {
        drop(unsafe { Box::from_raw(field) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn pc_field_q(field: *const PcField) -> u64 {
    unsafe { &*field }.0.q()
}

#[no_mangle]
pub unsafe extern "C" fn pc_field_p(field: *const PcField) -> u64 {
    unsafe { &*field }.0.p()
}

#[no_mangle]
pub unsafe extern "C" fn pc_field_k(field: *const PcField) -> u32 {
    unsafe { &*field }.0.k()
}

/// Encoding of the canonical generator.
#[no_mangle]
pub unsafe extern "C" fn pc_field_generator(field: *const PcField) -> u64 {
    unsafe { &*field }.0.generator()
}

/// Binomial a*x^{(q+1)/2} + b*x from units (u, v) of the order-m subgroup.
#[no_mangle]
pub unsafe extern "C" fn pc_construct_bin(
    field: *const PcField,
    m: u64,
    u: u64,
    v: u64,
    out: *mut *mut PcConstruction,
) -> PcStatus {
    let f = &unsafe { &*field }.0;
    match construct_bin(f, m, u, v) {
        Ok(c) => unsafe { write_out(out, PcConstruction(c)) },
        Err(e) => status_of(&e),
    }
}

/// Trinomial from units (u, v, w).
#[no_mangle]
pub unsafe extern "C" fn pc_construct_tri(
    field: *const PcField,
    m: u64,
    u: u64,
    v: u64,
    w: u64,
    out: *mut *mut PcConstruction,
) -> PcStatus {
    let f = &unsafe { &*field }.0;
    match construct_tri(f, m, u, v, w) {
        Ok(c) => unsafe { write_out(out, PcConstruction(c)) },
        Err(e) => status_of(&e),
    }
}

/// r-term cyclotomic construction x*G(x^{(q-1)/r}) from `r` units.
#[no_mangle]
pub unsafe extern "C" fn pc_construct_cyclotomic(
    field: *const PcField,
    r: u64,
    m: u64,
    units: *const u64,
    units_len: usize,
    out: *mut *mut PcConstruction,
) -> PcStatus {
    if units.is_null() {
        return PcStatus::PcErrNullPointer;
    }
    let f = &unsafe { &*field }.0;
    let units = unsafe { std::slice::from_raw_parts(units, units_len) };
    match construct_cyclotomic(f, r, m, units) {
        Ok(c) => unsafe { write_out(out, PcConstruction(c)) },
        Err(e) => status_of(&e),
    }
}

/// Geometric-sum construction from units (u, v) of order exactly m.
#[no_mangle]
pub unsafe extern "C" fn pc_construct_geom_sum(
    field: *const PcField,
    m: u64,
    u: u64,
    v: u64,
    out: *mut *mut PcConstruction,
) -> PcStatus {
    let f = &unsafe { &*field }.0;
    match construct_geom_sum(f, m, u, v) {
        Ok(c) => unsafe { write_out(out, PcConstruction(c)) },
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn pc_construction_free(c: *mut PcConstruction) {
    if !c.is_null() {
        drop(unsafe { Box::from_raw(c) });
    }
}

/// Polynomial in text form; free with pc_string_free.
#[no_mangle]
pub unsafe extern "C" fn pc_construction_poly(c: *const PcConstruction) -> *mut c_char {
    leak_string(unsafe { &*c }.0.poly().to_string())
}

/// Compositional inverse polynomial in text form.
#[no_mangle]
pub unsafe extern "C" fn pc_construction_inverse_poly(c: *const PcConstruction) -> *mut c_char {
    leak_string(unsafe { &*c }.0.inverse_poly().to_string())
}

/// Predicted cycle type, e.g. "1+3^4".
#[no_mangle]
pub unsafe extern "C" fn pc_construction_cycle_type(c: *const PcConstruction) -> *mut c_char {
    leak_string(unsafe { &*c }.0.predicted().to_string())
}

/// Full construction record as a JSON object.
#[no_mangle]
pub unsafe extern "C" fn pc_construction_json(c: *const PcConstruction) -> *mut c_char {
    leak_string(serde_json::to_string(&unsafe { &*c }.0).expect("serialize"))
}

/// Runs the exhaustive oracle: bijection, predicted cycle type and (when
/// `check_inverse` is nonzero) inverse composition.
#[no_mangle]
pub unsafe extern "C" fn pc_construction_verify(
    c: *const PcConstruction,
    check_inverse: i32,
) -> PcStatus {
    match verify_construction(&unsafe { &*c }.0, check_inverse != 0) {
        Ok(()) => PcStatus::PcOk,
        Err(e) => status_of(&e),
    }
}

/// Parses `poly_text` over the field and analyzes it. Writes 1 or 0 to
/// `out_is_permutation` and, when the map is a permutation, the cycle
/// type string to `out_cycle_type` (otherwise NULL).
#[no_mangle]
pub unsafe extern "C" fn pc_verify_poly(
    field: *const PcField,
    poly_text: *const c_char,
    out_is_permutation: *mut i32,
    out_cycle_type: *mut *mut c_char,
) -> PcStatus {
    if poly_text.is_null() || out_is_permutation.is_null() || out_cycle_type.is_null() {
        return PcStatus::PcErrNullPointer;
    }
    let text = match unsafe { CStr::from_ptr(poly_text) }.to_str() {
        Ok(t) => t,
        Err(_) => return PcStatus::PcErrInvalidUtf8,
    };
    let f = unsafe { &*field }.0.clone();
    let poly = match SparsePoly::parse(f, text) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let report = verify_poly(&poly, None);
    unsafe {
        *out_is_permutation = report.is_permutation as i32;
        *out_cycle_type = match report.cycle_type {
            Some(t) => leak_string(t),
            None => std::ptr::null_mut(),
        };
    }
    PcStatus::PcOk
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
