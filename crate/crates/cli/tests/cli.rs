mod common;

use common::abcd;
use std::process::Command;

fn stdout(args: &[&str]) -> String {
    let out = abcd(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    abcd(args).status.code().unwrap()
}

#[test]
fn classify_lines() {
    assert!(stdout(&["classify", "1", "-2", "0", "1"]).starts_with("Parabolic trace=2\n"));
    let e = stdout(&[
        "--precision",
        "7",
        "classify",
        "0.955336489125606",
        "-0.29552020666134",
        "0.29552020666134",
        "0.955336489125606",
    ]);
    assert!(e.starts_with("Elliptic trace=1.910673\n"), "{e}");
    let neg = stdout(&["classify", "--", "-2", "-1", "-1", "-1"]);
    assert!(
        neg.starts_with("Hyperbolic trace=-3 negative_trace\n"),
        "{neg}"
    );
}

#[test]
fn decompose_forms() {
    // rot2(1.0)
    let w = stdout(&[
        "decompose",
        "0.877582561890373",
        "-0.479425538604203",
        "0.479425538604203",
        "0.877582561890373",
    ]);
    assert!(w.contains("\nphi=0.5\n") && w.contains("\neta=0\n"), "{w}");
    // squeeze2(-0.8)
    let b = stdout(&[
        "decompose",
        "--form",
        "bargmann",
        "1.081072371838455",
        "-0.410752325802816",
        "-0.410752325802816",
        "1.081072371838455",
    ]);
    assert!(
        b.contains("\ntheta=0\n") && b.contains("\nlambda=0.4\n"),
        "{b}"
    );
    // transition_matrix(0.8, 1e-3)
    let d = (1.0 - 2e-3 * 0.8f64.sinh() * 0.8f64.cosh()).sqrt();
    let (d, u, l) = (
        d.to_string(),
        (-2.0 * 0.8f64.sinh()).to_string(),
        (1e-3 * 0.8f64.cosh()).to_string(),
    );
    let t = stdout(&["decompose", "--form", "transition", &d, &u, &l, &d]);
    assert!(t.contains("\nalpha_t=0.0487397984526\n"), "{t}");
    assert!(t.contains("\nbeta=0.0274403052283\n"), "{t}");
    assert!(t.contains("\nepsilon=0.001\n"), "{t}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["classify", "1", "0", "0", "2"]), 2);
    assert_eq!(code(&["classify", "1", "0", "0"]), 2);
    assert_eq!(code(&["classify", "1", "0", "0", "nan"]), 2);
    assert_eq!(
        code(&["decompose", "--form", "transition", "2", "3", "1", "2"]),
        3
    );
    assert_eq!(
        code(&[
            "transition-curve",
            "--eta",
            "0.8",
            "--eps-range",
            "0.01,0.05",
            "--steps",
            "5"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "stack",
            "--phi1",
            "1.5707963",
            "--phi2=-1.5707963",
            "--eta",
            "3",
            "--periods",
            "100000"
        ]),
        3
    );
    assert_eq!(code(&["stack", "--phi1", "0.4", "--phi2", "0.6"]), 2);
    assert_eq!(
        code(&[
            "stack",
            "--phi1",
            "0.4",
            "--phi2",
            "0.6",
            "--eta",
            "0",
            "--periods=-1"
        ]),
        2
    );
    assert_eq!(code(&["stack", "/nonexistent/stack.cfg"]), 2);
    assert_eq!(
        code(&[
            "little-group",
            "--kind",
            "spacelike",
            "--momentum",
            "1",
            "--energy",
            "2",
            "--param",
            "0"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "little-group",
            "--kind",
            "massive",
            "--momentum",
            "1",
            "--param",
            "0"
        ]),
        2
    );
    assert_eq!(
        code(&["--precision", "5", "classify", "1", "0", "0", "1"]),
        2
    );
    assert_eq!(
        code(&["--precision", "18", "classify", "1", "0", "0", "1"]),
        2
    );
}

#[test]
fn stack_sources() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("s.cfg");
    std::fs::write(&cfg, "phi1=0.4\nphi2=0.6\neta=0\n").unwrap();
    let cfg = cfg.display().to_string();
    let from_file = stdout(&["stack", &cfg, "--periods", "5"]);
    let inline = stdout(&[
        "stack",
        "--phi1",
        "0.4",
        "--phi2",
        "0.6",
        "--eta",
        "0",
        "--periods",
        "5",
    ]);
    assert_eq!(from_file, inline);
    assert!(from_file.contains("band=PassBand"));
    assert!(from_file.contains("bargmann lambda=0 "));
    assert_eq!(code(&["stack", &cfg, "--phi1", "0.4"]), 2);

    let csv = dir.path().join("zero.csv");
    stdout(&[
        "stack",
        &cfg,
        "--periods",
        "0",
        "--csv",
        &csv.display().to_string(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "n,a,b,c,d\n0,1,0,0,1\n"
    );
}

#[test]
fn stack_csv_matches_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    stdout(&[
        "--precision",
        "17",
        "stack",
        "--phi1",
        "0.4",
        "--phi2",
        "0.6",
        "--eta",
        "0.6",
        "--periods",
        "250",
        "--csv",
        &csv.display().to_string(),
    ]);
    let cycle =
        abcd_core::cycle_real(&abcd_core::LayerStack::new(0.4, 0.6, 0.6, 0).unwrap()).unwrap();
    let mut brute = abcd_core::Mat2::IDENTITY;
    let text = std::fs::read_to_string(&csv).unwrap();
    for (n, line) in text.lines().skip(1).enumerate() {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(v[0] as usize, n);
        let e = brute.entries();
        let diff = [e[0][0], e[0][1], e[1][0], e[1][1]]
            .iter()
            .zip(&v[1..])
            .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
        assert!(diff < 1e-10, "row {n}: {diff}");
        brute = brute * cycle;
    }
    assert_eq!(text.lines().count(), 252);
}

#[test]
fn tolerance_from_environment() {
    let args = [
        "classify",
        "0.955336489125606",
        "-0.29552020666134",
        "0.29552020666134",
        "0.955336489125606",
    ];
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_abcd"))
            .args(args)
            .env("ABCD_TOL", tol)
            .output()
            .unwrap()
    };
    assert!(String::from_utf8(run("0.1").stdout)
        .unwrap()
        .starts_with("Parabolic"));
    assert_eq!(run("-1").status.code(), Some(2));
    let flag = abcd(&[
        "--tol", "0.1", "classify", args[1], args[2], args[3], args[4],
    ]);
    assert!(String::from_utf8(flag.stdout)
        .unwrap()
        .starts_with("Parabolic"));
}

#[test]
fn little_group_reports() {
    let massive = stdout(&[
        "little-group",
        "--kind",
        "massive",
        "--mass",
        "1",
        "--momentum",
        "0",
        "--param",
        "0.5",
    ]);
    // rot4_y(1.0): cos 1 = 0.54030230586814, sin 1 = 0.84147098480790
    assert!(
        massive.contains("\nrow 0.540302305868 0 0.841470984808 0\n"),
        "{massive}"
    );
    let residual = |out: &str| -> f64 {
        out.lines()
            .find_map(|l| l.strip_prefix("residual="))
            .unwrap()
            .parse()
            .unwrap()
    };
    let m = stdout(&[
        "little-group",
        "--kind",
        "massive",
        "--mass",
        "1",
        "--momentum",
        "1",
        "--param",
        "0.3",
    ]);
    assert!(residual(&m) < 1e-12);
    let z = stdout(&[
        "little-group",
        "--kind",
        "massless",
        "--momentum",
        "1",
        "--param",
        "0.7",
    ]);
    assert!(residual(&z) < 1e-14);
    let sp = stdout(&[
        "little-group",
        "--kind",
        "spacelike",
        "--momentum",
        "2",
        "--energy",
        "1",
        "--param",
        "0.4",
    ]);
    assert!(residual(&sp) < 1e-12);
}
