#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn abcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abcd"))
        .args(args)
        .env_remove("ABCD_TOL")
        .output()
        .expect("run abcd")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// One fixture per subcommand: name, arguments, optional CSV file produced
/// next to stdout.
pub struct Fixture {
    pub name: &'static str,
    pub args: Vec<String>,
    pub csv: bool,
}

pub fn fixtures() -> Vec<Fixture> {
    let cfg = golden_dir().join("stack.cfg").display().to_string();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    vec![
        Fixture {
            name: "classify",
            args: s(&[
                "classify",
                "0.955336489125606",
                "-0.29552020666134",
                "0.29552020666134",
                "0.955336489125606",
            ]),
            csv: false,
        },
        Fixture {
            name: "decompose",
            args: s(&["decompose", "--form", "wigner", "2", "3", "1", "2"]),
            csv: false,
        },
        Fixture {
            name: "stack",
            args: {
                let mut a = s(&["stack"]);
                a.push(cfg);
                a
            },
            csv: true,
        },
        Fixture {
            name: "transition_curve",
            args: s(&[
                "transition-curve",
                "--eta",
                "0.8",
                "--eps-range=-0.05,0.05",
                "--steps",
                "21",
            ]),
            csv: false,
        },
        Fixture {
            name: "little_group",
            args: s(&[
                "little-group",
                "--kind",
                "massive",
                "--mass",
                "1",
                "--momentum",
                "1",
                "--param",
                "0.3",
            ]),
            csv: false,
        },
    ]
}

/// Runs a fixture; returns stdout and, for CSV fixtures, the CSV bytes.
pub fn run_fixture(f: &Fixture) -> (Output, Option<Vec<u8>>) {
    let dir = tempfile::tempdir().expect("tempdir");
    let csv_path = dir.path().join("out.csv");
    let mut args: Vec<&str> = f.args.iter().map(String::as_str).collect();
    let csv_arg = csv_path.display().to_string();
    if f.csv {
        args.push("--csv");
        args.push(&csv_arg);
    }
    let out = abcd(&args);
    let csv = f
        .csv
        .then(|| std::fs::read(&csv_path).expect("csv written"));
    (out, csv)
}

/// Byte comparison against the frozen files. With `ABCD_BLESS=1` the files
/// are rewritten instead.
pub fn check_fixture(f: &Fixture) -> Result<(), String> {
    let (out, csv) = run_fixture(f);
    if !out.status.success() {
        return Err(format!(
            "{}: exit {:?}: {}",
            f.name,
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let mut pairs = vec![(format!("{}.out", f.name), out.stdout)];
    if let Some(csv) = csv {
        pairs.push((format!("{}.csv", f.name), csv));
    }
    for (file, bytes) in pairs {
        let path = golden_dir().join(&file);
        if std::env::var_os("ABCD_BLESS").is_some() {
            std::fs::write(&path, &bytes).expect("write golden");
            continue;
        }
        let expected = std::fs::read(&path).map_err(|e| format!("{file}: {e}"))?;
        if expected != bytes {
            return Err(format!("{file}: output differs from golden file"));
        }
    }
    Ok(())
}
