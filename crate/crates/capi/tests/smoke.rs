//! Exercise the C ABI from Rust: build/query/free a crystal handle, call the
//! string-returning entry points, and check the error paths.

use std::ffi::{CStr, CString};
use std::ptr;

use affine_crystal_capi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    ac_string_free(ptr);
    s
}

#[test]
fn crystal_handle_lifecycle() {
    unsafe {
        let mut handle: *mut AcCrystal = ptr::null_mut();
        let status = ac_crystal_build(2, c("2*L0").as_ptr(), 5, 0, &mut handle);
        assert!(status == AcStatus::Ok);
        assert_eq!(ac_crystal_vertex_count(handle), 17);
        let mut counts = [0u64; 8];
        let written = ac_crystal_counts_by_degree(handle, counts.as_mut_ptr(), counts.len());
        assert_eq!(written, 6);
        assert_eq!(&counts[..6], &[1, 1, 2, 3, 4, 6]);
        let mut dot: *mut std::ffi::c_char = ptr::null_mut();
        assert!(ac_crystal_dot(handle, &mut dot) == AcStatus::Ok);
        let dot = take_string(dot);
        assert!(dot.starts_with("digraph crystal {"));
        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert!(ac_crystal_json(handle, &mut json) == AcStatus::Ok);
        let json = take_string(json);
        assert!(json.contains("\"vertices\""));
        ac_crystal_free(handle);
    }
}

#[test]
fn branching_and_js_series() {
    unsafe {
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_branching_json(
            2,
            c("L0+L1").as_ptr(),
            c("L0").as_ptr(),
            c("2*L0+L1").as_ptr(),
            7,
            3,
            &mut out,
        );
        assert!(status == AcStatus::Ok);
        let json = take_string(out);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(
            doc["coeffs"],
            serde_json::json!([1, 1, 2, 3, 4, 6, 8, 11])
        );

        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_js_series_json(2, c("1,1").as_ptr(), c("1,0").as_ptr(), 7, &mut out);
        assert!(status == AcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(doc["coeffs"], serde_json::json!([1, 2, 3, 4, 6, 9, 12, 17]));

        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_js_modules_json(2, c("2,0").as_ptr(), c("1,0").as_ptr(), 5, &mut out);
        assert!(status == AcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(doc.as_array().unwrap().len(), 2);
    }
}

#[test]
fn sharp_and_highest_lift() {
    unsafe {
        let mp = r#"{"n":4,"charges":[0,0,1],"parts":[[10,10,8,4,4],[9,9,1,1],[10,7,1]]}"#;
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_sharp_json(c(mp).as_ptr(), c("L0").as_ptr(), &mut out);
        assert!(status == AcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(
            doc["parts"],
            serde_json::json!([[10, 10, 10, 9, 9, 8, 7, 4, 4, 1, 1, 1]])
        );

        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_highest_lift_json(2, c("01|2*L0").as_ptr(), &mut out);
        assert!(status == AcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(doc["parts"], serde_json::json!([[1], []]));
    }
}

#[test]
fn character_json_and_errors() {
    unsafe {
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_character_json(2, c("2*L0").as_ptr(), 3, &mut out);
        assert!(status == AcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(doc["2*L1-1*d"], serde_json::json!(1));

        // Parse failure: status 2 plus a message.
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_character_json(2, c("2L0").as_ptr(), 1, &mut out);
        assert!(status == AcStatus::BadInput);
        let msg = CStr::from_ptr(ac_last_error()).to_str().unwrap();
        assert!(msg.contains("parse"), "{msg}");

        // Null pointer: status 1.
        let status = ac_character_json(2, ptr::null(), 1, &mut out);
        assert!(status == AcStatus::InvalidArgument);

        // Resource limit surfaces as status 4.
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let status = ac_branching_json(
            9,
            c("L0").as_ptr(),
            c("L1").as_ptr(),
            c("L0+L1").as_ptr(),
            2,
            2,
            &mut out,
        );
        assert!(status == AcStatus::ResourceLimit);
    }
}
