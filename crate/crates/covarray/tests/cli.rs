use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn covarray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covarray"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, variant: &str, q: u32) -> std::path::PathBuf {
    let path = dir.join(format!("{variant}-{q}.ca"));
    let o = covarray(&[
        "construct",
        "--variant",
        variant,
        "-q",
        &q.to_string(),
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    path
}

#[test]
fn construct_headers() {
    let dir = tempfile::tempdir().unwrap();
    for (variant, q, header, summary) in [
        ("ca4-half", 5, "CA 1873 4 13 5", "CA(1873; 4, 13, 5)"),
        ("ca3", 3, "CA 53 3 13 3", "CA(53; 3, 13, 3)"),
        ("ca4-full", 3, "CA 296 4 10 3", "CA(296; 4, 10, 3)"),
    ] {
        let path = dir.path().join("a.ca");
        let o = covarray(&[
            "construct",
            "--variant",
            variant,
            "-q",
            &q.to_string(),
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(stdout(&o).trim(), summary);
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().next().unwrap(), header);
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with(&format!("# provenance: {variant} q={q} poly=")));
    }
}

#[test]
fn construct_is_deterministic_and_streams_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "ca4-half", 7);
    let first = fs::read(&a).unwrap();
    let b = construct(dir.path(), "ca4-half", 7);
    assert_eq!(first, fs::read(&b).unwrap());
    let o = covarray(&["construct", "--variant", "ca4-half", "-q", "7"]);
    assert_eq!(o.stdout, first);
    assert_eq!(
        String::from_utf8_lossy(&o.stderr).trim(),
        "CA(7201; 4, 25, 7)"
    );
}

#[test]
fn invalid_q_is_a_usage_error() {
    for args in [
        ["construct", "--variant", "ca4-half", "-q", "4"],
        ["construct", "--variant", "ca4-full", "-q", "6"],
        ["construct", "--variant", "ca4-half", "-q", "17"],
        ["construct", "--variant", "ca3", "-q", "10"],
    ] {
        let o = covarray(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("q "),
            "{args:?}"
        );
    }
    let o = covarray(&["construct", "--variant", "ca4-half", "-q", "4"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("q must be an odd prime power"));
    let o = covarray(&["construct", "--variant", "nope", "-q", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let half = construct(dir.path(), "ca4-half", 3);
    let p = half.to_str().unwrap();

    let o = covarray(&["verify", p, "-t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let verdict = out.lines().last().unwrap();
    assert!(
        verdict.starts_with("VERDICT pass t=4 lambda_min=1 witnesses=0 ms="),
        "{verdict}"
    );

    let o = covarray(&["verify", p, "-t", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("VERDICT fail t=5 lambda_min=0"));
    assert!(stdout(&o).contains("missing ["));

    let text = fs::read_to_string(&half).unwrap();
    let headerless = dir.path().join("rows.txt");
    fs::write(
        &headerless,
        text.lines().skip(2).collect::<Vec<_>>().join("\n"),
    )
    .unwrap();
    let o = covarray(&["verify", headerless.to_str().unwrap(), "-t", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = covarray(&[
        "verify",
        headerless.to_str().unwrap(),
        "-t",
        "4",
        "--rows-only",
        "--v",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let truncated = dir.path().join("short.ca");
    fs::write(
        &truncated,
        text.lines().take(100).collect::<Vec<_>>().join("\n"),
    )
    .unwrap();
    assert_eq!(
        covarray(&["verify", truncated.to_str().unwrap(), "-t", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        covarray(&["verify", "/nonexistent.ca", "-t", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_engines() {
    let dir = tempfile::tempdir().unwrap();
    let half = construct(dir.path(), "ca4-half", 5);
    let p = half.to_str().unwrap();
    for engine in ["rank", "cross", "brute"] {
        let o = covarray(&["verify", p, "-t", "4", "--engine", engine]);
        assert_eq!(o.status.code(), Some(0), "{engine}: {}", stdout(&o));
    }
    assert_eq!(
        covarray(&["verify", p, "-t", "4", "--engine", "structural"])
            .status
            .code(),
        Some(2)
    );

    let full = construct(dir.path(), "ca4-full", 3);
    let o = covarray(&[
        "verify",
        full.to_str().unwrap(),
        "-t",
        "4",
        "--engine",
        "structural",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("two mirrored pairs: pass"));

    // flip one symbol: brute force fails, the rank engine refuses to vouch for the file
    let text = fs::read_to_string(&half).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let last = lines.len() - 1;
    let mut row: Vec<u32> = lines[last].split(' ').map(|w| w.parse().unwrap()).collect();
    row[0] = (row[0] + 1) % 5;
    lines[last] = row
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let bad = dir.path().join("bad.ca");
    fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let o = covarray(&[
        "verify",
        bad.to_str().unwrap(),
        "-t",
        "4",
        "--engine",
        "rank",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("differs from its ca4-half construction"));
    let o = covarray(&[
        "verify",
        bad.to_str().unwrap(),
        "-t",
        "4",
        "--engine",
        "cross",
    ]);
    assert!(
        stdout(&o).contains("certifies the construction, not this file"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn round_trip_supported_q() {
    let dir = tempfile::tempdir().unwrap();
    for q in [3u32, 5, 7, 9, 11, 13] {
        let half = construct(dir.path(), "ca4-half", q);
        let o = covarray(&["verify", half.to_str().unwrap(), "-t", "4"]);
        assert_eq!(o.status.code(), Some(0), "q={q}: {}", stdout(&o));
    }
    for q in [3u32, 5, 7, 9] {
        let full = construct(dir.path(), "ca4-full", q);
        // auto would brute force q = 7, which is slow in test builds
        let engine = if q >= 7 { "structural" } else { "auto" };
        let o = covarray(&[
            "verify",
            full.to_str().unwrap(),
            "-t",
            "4",
            "--engine",
            engine,
        ]);
        assert_eq!(o.status.code(), Some(0), "q={q}: {}", stdout(&o));
    }
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let ca3 = construct(dir.path(), "ca3", q);
        let o = covarray(&["verify", ca3.to_str().unwrap(), "-t", "3"]);
        assert_eq!(o.status.code(), Some(0), "q={q}: {}", stdout(&o));
    }
}

#[test]
fn poly_override() {
    let o = covarray(&[
        "construct",
        "--variant",
        "ca4-half",
        "-q",
        "7",
        "--poly",
        "3,4,5,0,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().contains("poly=3,4,5,0,1"));
    // column 1 is L(alpha^8) = (4, 1, 5, 5)
    let second_basis_row: Vec<&str> = text.lines().nth(3).unwrap().split(' ').collect();
    assert_eq!(second_basis_row[1], "5");
    let o = covarray(&[
        "construct",
        "--variant",
        "ca4-half",
        "-q",
        "7",
        "--poly",
        "1,0,0,0,1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn geometry_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = covarray(&[
        "geometry",
        "-q",
        "3",
        "--dump",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("trace-zero") && out.contains("max triple intersection 3"));
    let dump = fs::read_to_string(dir.path().join("mobius-q3-full.txt")).unwrap();
    assert!(dump.starts_with("MOBIUS q=3 variant=full poly="));
    assert_eq!(dump.lines().count(), 31);
    assert!(dir.path().join("mobius-q3-Mhalf.txt").exists());

    assert_eq!(covarray(&["geometry", "-q", "7"]).status.code(), Some(0));
    let o = covarray(&["geometry", "-q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd prime power"));
    let o = covarray(&["geometry", "-q", "17"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound 13"));
}

#[test]
fn tables_and_field_info() {
    let o = covarray(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = |q: &str| {
        out.lines()
            .filter(|l| l.split_whitespace().next() == Some(q))
            .collect::<Vec<_>>()
    };
    assert!(row("3")[0].contains(" 241 ") && row("3")[1].contains(" 294 "));
    assert!(row("13")[0].contains("85681"));
    assert!(row("25")[1].contains("1890050") && row("25")[1].contains("size-only"));

    let o = covarray(&["field-info", "-q", "7", "--poly", "3,4,5,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("descriptor: 7 1 4 4 1 3 4 5 0 1"));
    let o = covarray(&["--threads", "2", "field-info", "-q", "9", "-m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GF(9) = GF(3^2)"));
}

#[test]
fn threads_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_covarray"))
        .env("COVARRAY_THREADS", "1")
        .args(["tables"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_covarray"))
        .env("COVARRAY_THREADS", "many")
        .args(["tables"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
