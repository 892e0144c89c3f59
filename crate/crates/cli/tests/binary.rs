use std::io::Write;
use std::process::{Command, Output};

fn run(script: &str, args: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(script.as_bytes()).unwrap();
    Command::new(env!("CARGO_BIN_EXE_reeskernel"))
        .arg("run")
        .arg(f.path())
        .args(args)
        .output()
        .unwrap()
}

const OK: &str = "ring P = poly(QQ, [x, y])\nideal I = ideal(x*y)\nquotient Q = P / I\nkrull Q\nhilb Q 3\n";

#[test]
fn success_exits_zero() {
    let out = run(OK, &[]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("krull Q = 1\n"), "{stdout}");
    assert!(stdout.contains("hilb Q 3 = 2\n"), "{stdout}");
    assert!(out.stderr.is_empty());
}

#[test]
fn machine_format_and_timing() {
    let out = run(OK, &["--format", "machine", "--timing"]);
    assert_eq!(out.status.code(), Some(0));
    let run = reeskernel::parse_machine(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(run.reports.len(), 2);
    assert!(run.reports.iter().all(|r| r.ms.is_some()));
}

#[test]
fn parse_error_exits_two() {
    let out = run("ring P = poly(QQ, [x])\nideal I = ideal(x, q)\n", &[]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("2:20: unknown variable `q`"), "{stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn domain_error_exits_one() {
    let out = run("ring P = poly(GF(9), [x])\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    let failing = "ring S = poly(GF(7), [x, y])\nideal Z = ideal(0)\nquotient T = S / Z\n\
                   module C = coker(T, [[x, y]])\nlemma16 C split=1 deg=2\n";
    let out = run(failing, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("error: line 5"));
}

#[test]
fn missing_file_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_reeskernel"))
        .args(["run", "/nonexistent/script.rk"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_flag_is_accepted() {
    let out = run(OK, &["--order", "lex", "--maxdeg", "3"]);
    assert_eq!(out.status.code(), Some(0));
}
