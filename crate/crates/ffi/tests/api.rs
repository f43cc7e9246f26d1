use std::ffi::{c_char, CStr, CString};
use std::ptr;

use grigorchuk_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    grg_string_free(s);
    out
}

unsafe fn omega(text: &str) -> *mut GrgOmega {
    let mut out = ptr::null_mut();
    assert_eq!(grg_omega_parse(c(text).as_ptr(), &mut out), GrgStatus::Ok);
    out
}

unsafe fn element(w: *const GrgOmega, word: &str) -> *mut GrgElement {
    let mut out = ptr::null_mut();
    assert_eq!(grg_element_parse(w, c(word).as_ptr(), &mut out), GrgStatus::Ok);
    out
}

#[test]
fn omega_round_trip_and_errors() {
    unsafe {
        let w = omega("0:1212");
        let mut s = ptr::null_mut();
        assert_eq!(grg_omega_to_string(w, &mut s), GrgStatus::Ok);
        assert_eq!(take(s), "0:12");
        let mut free = false;
        assert_eq!(grg_omega_is_repetition_free(w, &mut free), GrgStatus::Ok);
        assert!(free);
        grg_omega_free(w);

        let mut out = ptr::null_mut();
        assert_eq!(grg_omega_parse(c("013").as_ptr(), &mut out), GrgStatus::InvalidOmega);
        assert!(out.is_null());
        let message = CStr::from_ptr(grg_last_error()).to_str().unwrap();
        assert!(message.contains("013"));
        assert_eq!(grg_omega_parse(ptr::null(), &mut out), GrgStatus::NullPointer);
    }
}

#[test]
fn word_problem() {
    unsafe {
        let w = omega(":012");
        let g = element(w, "adadadad");
        let mut trivial = false;
        assert_eq!(grg_element_is_trivial(g, &mut trivial), GrgStatus::Ok);
        assert!(trivial);
        let b = element(w, "b");
        let cd = element(w, "cd");
        let mut equal = false;
        assert_eq!(grg_element_equal(b, cd, &mut equal), GrgStatus::Ok);
        assert!(equal);
        let mut product = ptr::null_mut();
        assert_eq!(grg_element_mul(b, cd, &mut product), GrgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(grg_element_word(product, &mut s), GrgStatus::Ok);
        assert_eq!(take(s), "1");

        let mut bad = ptr::null_mut();
        assert_eq!(grg_element_parse(w, c("abe").as_ptr(), &mut bad), GrgStatus::InvalidWord);

        let other = omega(":01");
        let h = element(other, "b");
        assert_eq!(grg_element_equal(b, h, &mut equal), GrgStatus::OmegaMismatch);
        for e in [g, b, cd, product, h] {
            grg_element_free(e);
        }
        grg_omega_free(w);
        grg_omega_free(other);
    }
}

#[test]
fn action_on_rays_and_vertices() {
    unsafe {
        let w = omega(":012");
        let a = element(w, "a");
        let b = element(w, "b");
        let mut s = ptr::null_mut();
        assert_eq!(grg_element_apply(a, c("0inf").as_ptr(), &mut s), GrgStatus::Ok);
        assert_eq!(take(s), "1");

        let mut v = ptr::null_mut();
        assert_eq!(grg_vertex_parse(c("∅").as_ptr(), &mut v), GrgStatus::Ok);
        let mut image = ptr::null_mut();
        assert_eq!(grg_vertex_act(v, b, &mut image), GrgStatus::Ok);
        assert_eq!(grg_vertex_to_string(image, &mut s), GrgStatus::Ok);
        assert_eq!(take(s), "0inf,01");
        let mut d = 0;
        assert_eq!(grg_vertex_distance(v, image, &mut d), GrgStatus::Ok);
        assert_eq!(d, 2);

        let mut bad = ptr::null_mut();
        assert_eq!(grg_vertex_parse(c("0inf,2").as_ptr(), &mut bad), GrgStatus::InvalidVertex);
        grg_vertex_free(v);
        grg_vertex_free(image);
        grg_element_free(a);
        grg_element_free(b);
        grg_omega_free(w);
    }
}

#[test]
fn schreier_and_stabilizers() {
    unsafe {
        let w = omega(":012");
        let mut s = ptr::null_mut();
        assert_eq!(grg_schreier_export(w, 0, GrgFormat::Jsonl, &mut s), GrgStatus::Ok);
        assert_eq!(take(s).lines().count(), 1);

        let mut order = 0;
        let mut kind = ptr::null_mut();
        assert_eq!(grg_stabilizer(w, GrgTarget::GammaPlus, 8, &mut order, &mut kind), GrgStatus::Ok);
        assert_eq!((order, take(kind).as_str()), (8, "D8"));
        assert_eq!(grg_stabilizer(w, GrgTarget::GammaPlusTilde, 8, &mut order, ptr::null_mut()), GrgStatus::Ok);
        assert_eq!(order, 4);
        grg_omega_free(w);

        let repeated = omega("1:0");
        assert_eq!(
            grg_stabilizer(repeated, GrgTarget::GammaPlus, 4, &mut order, ptr::null_mut()),
            GrgStatus::NotRepetitionFree
        );
        grg_omega_free(repeated);
    }
}

#[test]
fn freeing_null_is_a_no_op() {
    unsafe {
        grg_omega_free(ptr::null_mut());
        grg_element_free(ptr::null_mut());
        grg_vertex_free(ptr::null_mut());
        grg_string_free(ptr::null_mut());
    }
}
