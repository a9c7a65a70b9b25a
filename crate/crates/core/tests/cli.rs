use std::path::PathBuf;
use std::process::{Command, Output};

use modpi::modeq::{embedded_tables, write_modeq_file, ModEqId};
use modpi::numkernel::IntPoly;
use modpi::quatforms::GramSet;
use modpi::report::{CheckReport, Status};

fn modpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modpi"))
        .args(args)
        .env_remove("MODPI_DATA")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("modpi-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn arith_passes_with_exit_zero() {
    let o = modpi(&["verify", "arith"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("CHECK ") && l.contains(" PASS ")), "{out}");
    assert!(out.contains("CHECK type_number PASS 8"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(modpi(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(modpi(&["pi", "chudnovsky", "--bogus"]).status.code(), Some(2));
    assert_eq!(modpi(&["pi", "series", "--n", "11"]).status.code(), Some(2));
    assert_eq!(modpi(&["pi", "ramanujan", "--id", "rampi9"]).status.code(), Some(2));
    assert_eq!(modpi(&["verify", "modeq", "--id", "f-g9"]).status.code(), Some(2));
}

#[test]
fn chudnovsky_digits_layout() {
    let o = modpi(&["pi", "chudnovsky", "--digits", "120", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "3.14159265358979323846264338327950288419716939937510");
    assert_eq!(lines[1].len(), 50);
    assert_eq!(lines[2].len(), 20);
    assert!(lines[3].starts_with("CHECK pi_120 PASS"));
}

#[test]
fn machin_and_chudnovsky_print_the_same() {
    let a = stdout(&modpi(&["pi", "machin", "--digits", "300"]));
    let b = stdout(&modpi(&["pi", "chudnovsky", "--digits", "300"]));
    assert_eq!(a, b);
}

#[test]
fn series_for_one_n() {
    let o = modpi(&["pi", "series", "--n", "43", "--digits", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("CHECK series_n43_25 PASS"));
}

#[test]
fn structured_report_is_json_lines() {
    let o = modpi(&["report", "singular", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<CheckReport> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = recs.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(
        names,
        [
            "f_value",
            "value_tables",
            "g2_exact",
            "constant_recovery",
            "v_c_identity",
            "modeq_specialize_326",
            "modeq_pole_sextic"
        ]
    );
    assert!(recs.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn modeq_all_prints_seven_lines() {
    let o = modpi(&["verify", "modeq", "--all", "--order", "120"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("CHECK modeq_f-")).count(), 7, "{out}");
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn output_order_is_deterministic() {
    let a = stdout(&modpi(&["verify", "arith"]));
    let b = stdout(&modpi(&["verify", "arith"]));
    let names = |s: &str| s.lines().map(|l| l.split(' ').nth(1).unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(names(&a), names(&b));
}

#[test]
fn data_dir_override_and_corrupt_table() {
    let dir = scratch_dir("corrupt");
    std::fs::write(dir.join("gram_p163.txt"), GramSet::embedded_p163().to_file_string()).unwrap();
    let mut tables = embedded_tables();
    let g5 = tables.iter_mut().find(|t| t.id == ModEqId::G(5)).unwrap();
    let mut c = g5.rows[0].coeffs().to_vec();
    c[0] += 1;
    g5.rows[0] = IntPoly::new(c);
    std::fs::write(dir.join("modeq_p163.txt"), write_modeq_file(&tables)).unwrap();

    let d = dir.to_str().unwrap();
    let o = modpi(&["verify", "modeq", "--id", "f-g5", "--order", "20", "--data", d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("CHECK modeq_f-g5 FAIL"));

    let o = Command::new(env!("CARGO_BIN_EXE_modpi"))
        .args(["verify", "modeq", "--id", "f-g4", "--order", "20"])
        .env("MODPI_DATA", d)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_modpi"))
        .args(["verify", "span", "--order", "20"])
        .env("MODPI_DATA", dir.join("missing"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}
