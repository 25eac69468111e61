//! Compiles and runs a small C program against the generated header and
//! the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "rankwitness.h"

int main(void) {
    RwField *f = NULL;
    if (rw_field_new(2, 1, 4, 1, false, &f) != RW_STATUS_OK) return 1;
    uint32_t g = rw_field_primitive(f), inv = 0, one = 0;
    if (rw_field_div(f, 1, g, &inv) != RW_STATUS_OK) return 2;
    if (rw_field_mul(f, inv, g, &one) != RW_STATUS_OK || one != 1) return 3;
    if (rw_field_div(f, 1, 0, &inv) != RW_STATUS_ARITHMETIC) return 4;
    if (strlen(rw_last_error_message()) == 0) return 5;
    rw_field_free(f);

    char *report = NULL;
    if (rw_run_bundled("gabidulin_n4_binomial", false, &report) != RW_STATUS_OK) return 6;
    if (strstr(report, "\"verified\":true") == NULL) return 7;
    rw_string_free(report);
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(
        include.join("rankwitness.h").is_file(),
        "header not generated"
    );
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let src = dir.join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();

    let syntax = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .expect("a C compiler is available");
    assert!(syntax.success());

    let lib = target_dir().join("librankwitness_ffi.a");
    assert!(lib.is_file(), "{} missing", lib.display());
    let exe = dir.join("smoke");
    let link = Command::new("cc")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(link.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
