use std::ffi::{CStr, CString};
use std::ptr;

use regiongray_ffi::*;

fn line(l: *const RgListing, i: usize) -> String {
    unsafe { CStr::from_ptr(rg_listing_line(l, i)).to_str().unwrap().to_string() }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(rg_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn generate_and_read_back() {
    let fam = CString::new("perm").unwrap();
    let mut l = ptr::null_mut();
    unsafe {
        assert_eq!(rg_generate(fam.as_ptr(), 3, &mut l), RgStatus::Ok);
        assert_eq!(rg_listing_len(l), 6);
        assert!(rg_listing_is_cyclic(l));
        assert!(rg_listing_line(l, 6).is_null());
    }
    assert_eq!(line(l, 0), "1 2 3");
    assert_eq!(line(l, 1), "1 3 2");
    unsafe { rg_listing_free(l) };
}

#[test]
fn counts() {
    let mut k = 0u64;
    let fam = CString::new("sym-triangulation").unwrap();
    assert_eq!(unsafe { rg_count(fam.as_ptr(), 3, &mut k) }, RgStatus::Ok);
    assert_eq!(k, 20);
    let fam = CString::new("signed-perm").unwrap();
    assert_eq!(unsafe { rg_count(fam.as_ptr(), 4, &mut k) }, RgStatus::Ok);
    assert_eq!(k, 384);
}

#[test]
fn error_codes() {
    let fam = CString::new("nonsense").unwrap();
    let mut l = ptr::null_mut();
    assert_eq!(unsafe { rg_generate(fam.as_ptr(), 3, &mut l) }, RgStatus::Input);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { rg_generate(ptr::null(), 3, &mut l) }, RgStatus::Null);
    let fam = CString::new("binary").unwrap();
    assert_eq!(unsafe { rg_generate(fam.as_ptr(), 3, ptr::null_mut()) }, RgStatus::Null);
    unsafe { rg_listing_free(ptr::null_mut()) };
}

#[test]
fn verify_text() {
    let fam = CString::new("binary").unwrap();
    let ok = CString::new("00\n01\n11\n10\n").unwrap();
    assert_eq!(unsafe { rg_verify_text(fam.as_ptr(), 2, ok.as_ptr()) }, RgStatus::Ok);
    let bad = CString::new("00\n11\n01\n10\n").unwrap();
    assert_eq!(
        unsafe { rg_verify_text(fam.as_ptr(), 2, bad.as_ptr()) },
        RgStatus::Invalid
    );
    assert!(last_error().contains("entry 0"), "{}", last_error());
}

#[test]
fn arrangement_handle() {
    let json =
        CString::new(r#"{"dim": 3, "normals": [[1,0,0],[0,1,0],[1,1,0],[0,0,1]], "chain": [[0,1,2],[0,1,2,3]]}"#)
            .unwrap();
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(rg_arrangement_from_json(json.as_ptr(), &mut a), RgStatus::Ok);
        assert_eq!(rg_arrangement_len(a), 4);
        assert_eq!(rg_arrangement_rank(a), 3);
        let mut k = 0;
        assert_eq!(rg_arrangement_region_count(a, &mut k), RgStatus::Ok);
        assert_eq!(k, 12);
        let mut l = ptr::null_mut();
        assert_eq!(rg_arrangement_ham_cycle(a, &mut l), RgStatus::Ok);
        assert_eq!(rg_listing_len(l), 12);
        rg_listing_free(l);
        rg_arrangement_free(a);
    }
    let bad = CString::new(r#"{"dim": 2, "normals": [[1,0],[2,0]]}"#).unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { rg_arrangement_from_json(bad.as_ptr(), &mut a) },
        RgStatus::Input
    );
    assert!(a.is_null());
}

#[test]
fn header_lists_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/regiongray.h")).unwrap();
    for name in [
        "rg_generate",
        "rg_listing_len",
        "rg_listing_line",
        "rg_listing_free",
        "rg_count",
        "rg_verify_text",
        "rg_arrangement_from_json",
        "rg_arrangement_ham_cycle",
        "rg_last_error",
        "typedef struct RgListing RgListing",
        "RG_STATUS_INVALID",
    ] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
