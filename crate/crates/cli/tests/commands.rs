use std::fs;
use std::process::Command;

use walls_cli::args::Seq;
use walls_cli::oeis::{self, parse_bfile, SliceValues, MAPS};
use walls_cli::table::{cache_path, compute, digest};
use walls_cli::verify::REGISTRY;

fn walls(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_walls"))
        .args(args)
        .env_remove("WALLS_CACHE_DIR")
        .output()
        .expect("the walls binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = walls(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn lib(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = walls_cli::run(std::iter::once("walls").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

#[test]
fn table_text_rows() {
    let out = stdout_of(&["table", "--seq", "b", "--nmax", "4", "--format", "text"]);
    assert_eq!(out, "1\n1 1\n2 7 7\n5 38 106 106\n14 187 1010 2575 2575\n");
    assert_eq!(stdout_of(&["table", "--seq", "tc", "--nmax", "1", "--format", "text"]), "1\n");
    assert_eq!(stdout_of(&["table", "--seq", "tc", "--nmax", "1"]), "n,k,value\n1,0,1\n");
}

#[test]
fn table_slices() {
    let out = stdout_of(&["table", "--seq", "a", "--nmax", "5", "--k", "1", "--format", "bfile"]);
    assert_eq!(out, "1 1\n2 7\n3 57\n4 561\n5 6555\n");
    let out = stdout_of(&["table", "--seq", "tc", "--nmax", "4", "--diagonal", "--format", "bfile"]);
    assert_eq!(out, "1 1\n2 2\n3 42\n4 2544\n");
    let out = stdout_of(&["table", "--seq", "b3", "--nmax", "3", "--m", "2", "--k", "1", "--format", "bfile"]);
    assert_eq!(out, "2 7\n3 23\n");
    let out = stdout_of(&["table", "--seq", "a", "--nmax", "3", "--kmax", "1"]);
    assert_eq!(out, "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,3\n2,1,7\n3,0,15\n3,1,57\n");
}

#[test]
fn three_index_tables() {
    let out = stdout_of(&["table", "--seq", "omega", "--nmax", "2"]);
    assert!(out.starts_with("n,m,k,value\n0,0,0,1\n"));
    let b3 = stdout_of(&["table", "--seq", "b3", "--nmax", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&b3).unwrap();
    let cells = doc["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 20);
    assert_eq!(cells[6], serde_json::json!({"n": 2, "m": 1, "k": 1, "value": "3"}));
}

#[test]
fn appendix_tables() {
    assert_eq!(stdout_of(&["table", "--seq", "f", "--nmax", "2", "--format", "text"]), "1\n1 1\n1 3 3\n");
    assert_eq!(stdout_of(&["table", "--seq", "ftilde", "--nmax", "2", "--format", "text"]), "1 2\n3 18 30\n");
    let u = stdout_of(&["table", "--seq", "u", "--nmax", "2", "--format", "text"]);
    assert_eq!(u.lines().nth(2).unwrap().split(' ').nth(1), Some("13"));
}

#[test]
fn bad_tables_are_usage_errors() {
    for args in [
        &["table", "--seq", "a"][..],
        &["table", "--nmax", "3"],
        &["table", "--seq", "q", "--nmax", "3"],
        &["table", "--seq", "a", "--nmax", "-1"],
        &["table", "--seq", "a", "--nmax", "3", "--format", "bfile"],
        &["table", "--seq", "a", "--nmax", "3", "--m", "1"],
        &["table", "--seq", "b3", "--nmax", "3", "--diagonal"],
        &["table", "--seq", "b3", "--nmax", "3", "--k", "1", "--format", "bfile"],
        &["table", "--seq", "a", "--nmax", "3", "--k", "1", "--diagonal"],
    ] {
        assert_eq!(lib(args).0, 2, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--seq", "omega", "--nmax", "6", "--format", "json"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn series_examples() {
    assert_eq!(stdout_of(&["series", "--dk", "1", "--order", "4", "--method", "kernel"]), "0 1 7 38 187\n");
    assert_eq!(stdout_of(&["series", "--dk", "0", "--order", "4", "--method", "recurrence"]), "1 1 2 5 14\n");
    assert_eq!(stdout_of(&["series", "--dk", "2", "--order", "4", "--method", "closed"]), "0 0 7 106 1010\n");
    assert_eq!(stdout_of(&["series", "--dk", "3", "--order", "3", "--format", "bfile"]), "0 0\n1 0\n2 0\n3 106\n");
}

#[test]
fn closed_series_at_zero_is_a_usage_error() {
    let (code, _, err) = walls(&["series", "--dk", "0", "--order", "4", "--method", "closed"]);
    assert_eq!(code, 2);
    assert!(err.contains("(-1)!"), "{err}");
    assert_eq!(walls(&["series", "--order", "4"]).0, 2);
}

#[test]
fn oracle_examples() {
    assert_eq!(stdout_of(&["oracle", "--seq", "b", "--n", "4", "--k", "2"]), "brute 1010\nfast 1010\nagree\n");
    assert_eq!(stdout_of(&["oracle", "--seq", "a", "--n", "3", "--k", "3"]), "brute 106\nfast 106\nagree\n");
    assert_eq!(stdout_of(&["oracle", "--seq", "b3", "--n", "2", "--m", "1", "--k", "1"]), "brute 3\nfast 3\nagree\n");
    assert!(stdout_of(&["oracle", "--seq", "u", "--n", "2", "--k", "1"]).starts_with("brute 13\n"));
    let json = stdout_of(&["oracle", "--seq", "f", "--n", "3", "--k", "2", "--format", "json"]);
    assert!(json.contains("\"agree\":true"), "{json}");
}

#[test]
fn oracle_errors() {
    let (code, _, err) = walls(&["oracle", "--seq", "a", "--n", "9", "--k", "7"]);
    assert_eq!(code, 3);
    assert!(err.contains("capacity"), "{err}");
    assert_eq!(walls(&["oracle", "--seq", "tc", "--n", "3", "--k", "1"]).0, 2);
    assert_eq!(walls(&["oracle", "--seq", "b3", "--n", "3", "--k", "1"]).0, 2);
}

#[test]
fn verify_single_checks() {
    let (code, out) = lib(&["verify", "--check", "main-identity", "--nmax", "30"]);
    assert_eq!((code, out.as_str()), (0, "PASS main-identity nmax=30\n"));
    let (code, out) = lib(&["verify", "--check", "omega-vanishing", "--nmax", "10"]);
    assert_eq!((code, out.as_str()), (0, "PASS omega-vanishing nmax=10 kmax=6\n"));
    let (code, out) = lib(&["verify", "--check", "dk-threeway", "--kmax", "8", "--order", "20"]);
    assert_eq!((code, out.as_str()), (0, "PASS dk-threeway kmax=8 order=20\n"));
}

#[test]
fn verify_rejects_unknown_names() {
    let (code, out) = lib(&["verify", "--check", "nonsense"]);
    assert_eq!(code, 2);
    assert!(out.contains("main-identity"));
    assert_eq!(lib(&["verify"]).0, 2);
}

#[test]
fn registry_names_are_unique() {
    let mut names: Vec<&str> = REGISTRY.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), REGISTRY.len());
    assert!(!names.contains(&"all"));
}

#[test]
fn crosscheck_examples() {
    for (id, map) in [("A000108", "b-k0"), ("A213863", "a-diag"), ("A000531", "b-k1"), ("A122649", "a-k1")] {
        let out = stdout_of(&["crosscheck", "--oeis", id, "--map", map, "--offline"]);
        assert!(out.starts_with(&format!("PASS {id} ~ {map} offset ")), "{out}");
    }
    let out = stdout_of(&["crosscheck", "--oeis", "A122649", "--offline"]);
    assert!(out.contains("offset 1"), "{out}");
}

#[test]
fn crosscheck_usage() {
    assert_eq!(lib(&["crosscheck", "--offline"]).0, 2);
    assert_eq!(lib(&["crosscheck", "--oeis", "A000045", "--offline"]).0, 2);
    assert_eq!(lib(&["crosscheck", "--oeis", "A000108", "--map", "a-diag", "--offline"]).0, 2);
}

#[test]
fn crosscheck_detects_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b000531.txt");
    fs::write(&path, "# comment\n1 1\n2 7\n3 39\n").unwrap();
    let (code, out, _) = walls(&["crosscheck", "--map", "b-k1", "--bfile", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("index 3: oeis 39, ours 38"), "{out}");
    fs::write(&path, "1 1\n2\n").unwrap();
    assert_eq!(walls(&["crosscheck", "--map", "b-k1", "--bfile", path.to_str().unwrap()]).0, 1);
}

#[test]
fn bfile_round_trips_through_crosscheck() {
    let dir = tempfile::tempdir().unwrap();
    for (seq, slice, map) in [
        ("b", &["--k", "0"][..], "b-k0"),
        ("b", &["--k", "1"], "b-k1"),
        ("a", &["--k", "1"], "a-k1"),
        ("a", &["--diagonal"], "a-diag"),
    ] {
        let mut args = vec!["table", "--seq", seq, "--nmax", "20", "--format", "bfile"];
        args.extend_from_slice(slice);
        let text = stdout_of(&args);
        let path = dir.path().join(format!("{map}.txt"));
        fs::write(&path, &text).unwrap();
        let out = stdout_of(&["crosscheck", "--map", map, "--bfile", path.to_str().unwrap()]);
        assert!(out.starts_with("PASS"), "{out}");
        let parsed = parse_bfile(&text).unwrap();
        assert_eq!(parsed.first().unwrap().0, MAPS.iter().find(|m| m.label == map).unwrap().offset);
    }
}

#[test]
fn fixtures_cover_sixty_terms() {
    let mut values = SliceValues::new();
    for map in &MAPS {
        let entries = parse_bfile(map.fixture).unwrap();
        assert_eq!(entries.first().unwrap().0, map.offset);
        assert_eq!(entries.last().unwrap().0, 60);
        let cmp = oeis::compare(map, &entries, 60, &mut values);
        assert!(cmp.mismatch.is_none());
        assert_eq!(cmp.compared, entries.len());
    }
    assert_eq!(oeis::bfile_url("A000108"), "https://oeis.org/A000108/b000108.txt");
}

#[test]
fn cache_reloads_identical_values() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let fresh = stdout_of(&["table", "--seq", "b", "--nmax", "8"]);
    assert_eq!(stdout_of(&["table", "--seq", "b", "--nmax", "8", "--cache-dir", cache]), fresh);
    let path = cache_path(dir.path(), Seq::B, 8);
    let stored: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let cells = compute(Seq::B, 8).unwrap();
    assert_eq!(stored["sha256"], digest(&cells));
    assert_eq!(stored["cells"][5]["value"], "7");
    assert_eq!(stdout_of(&["table", "--seq", "b", "--nmax", "8", "--cache-dir", cache]), fresh);
}

#[test]
fn tampered_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let fresh = stdout_of(&["table", "--seq", "a", "--nmax", "5", "--cache-dir", cache]);
    let path = cache_path(dir.path(), Seq::A, 5);
    let text = fs::read_to_string(&path).unwrap().replace("\"57\"", "\"58\"");
    fs::write(&path, text).unwrap();
    let (code, out, err) = walls(&["table", "--seq", "a", "--nmax", "5", "--cache-dir", cache]);
    assert_eq!(code, 0);
    assert_eq!(out, fresh);
    assert!(err.contains("hash"), "{err}");
    assert!(fs::read_to_string(&path).unwrap().contains("\"57\""));
}

#[test]
fn cache_env_overrides_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_walls"))
        .args(["table", "--seq", "tc", "--nmax", "4", "--cache-dir", flag_dir.path().to_str().unwrap()])
        .env("WALLS_CACHE_DIR", env_dir.path())
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    assert!(cache_path(env_dir.path(), Seq::Tc, 4).exists());
    assert!(!cache_path(flag_dir.path(), Seq::Tc, 4).exists());
}

#[test]
fn asym_report() {
    let out = stdout_of(&["asym", "--n", "200", "--k", "0"]);
    let err: f64 = out.trim().rsplit('=').next().unwrap().parse().unwrap();
    assert!(err < 1e-3, "{out}");
    let json = stdout_of(&["asym", "--n", "50", "--k", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(doc["relative_error"].as_f64().unwrap() > 0.0);
    assert_eq!(walls(&["asym", "--n", "3", "--k", "3"]).0, 2);
}

#[test]
fn help_exits_cleanly() {
    let (code, out) = lib(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("crosscheck"));
}
