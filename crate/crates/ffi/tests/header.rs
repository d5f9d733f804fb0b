use std::path::Path;
use std::process::Command;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(crate_dir().join("include/hyperbessel.h")).unwrap();
    for item in [
        "typedef struct HbParams HbParams;",
        "HB_STATUS_OK = 0",
        "HB_STATUS_INTERNAL = 11",
        "hb_params_new(const double *alphas, size_t d, struct HbParams **out)",
        "void hb_params_free(struct HbParams *params)",
        "hb_zeros(",
        "hb_radius(",
        "hb_boundary_sup(",
        "size_t hb_last_error_message(char *buf, size_t len)",
    ] {
        assert!(header.contains(item), "header lacks {item}");
    }
}

#[test]
fn c_program_compiles_against_header() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let out = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Wextra", "-Werror", "-fsyntax-only", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .output()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
