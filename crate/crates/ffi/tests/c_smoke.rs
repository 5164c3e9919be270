//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "holderq.h"

int main(void) {
    double a[] = {3.0, 4.0}, v = 0.0;
    HqExponent p = {HQ_EXPONENT_TAG_FINITE, 2.0};
    if (hq_holder_functional(a, 2, p, &v) != HQ_STATUS_OK || v != 5.0) return 1;

    HqStream *s = NULL;
    if (hq_stream_new(2.0, -1.0, &s) != HQ_STATUS_OK) return 2;
    hq_stream_push(s, 1.0, 2.0);
    hq_stream_push(s, 3.0, 1.0);
    HqReport r;
    if (hq_stream_check(s, &r, NULL, NULL) != HQ_STATUS_OK) return 3;
    if (r.verdict != HQ_VERDICT_HOLDS_STRICT || r.n != 2) return 4;
    hq_stream_free(s);

    if (hq_stream_push(NULL, 1.0, 1.0) != HQ_STATUS_NULL_POINTER) return 5;
    printf("%s\n", hq_status_message(HQ_STATUS_OK));
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipped: no C compiler");
        return;
    }
    // target/<profile>/deps/<this test> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libholderq_ffi.a");
    if !lib.exists() {
        eprintln!("skipped: {} not built", lib.display());
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c_smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg(format!("-I{}/include", env!("CARGO_MANIFEST_DIR")))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "compile/link failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
