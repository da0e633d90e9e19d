//! The binary end to end, through temporary files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gfm(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gfm")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_intro_example() {
    let dir = TempDir::new().unwrap();
    let i = file(&dir, "i.txt", "variant gfm\nwildcards 0\ntext x y y x\npattern a b a\n");
    let r = gfm(&["solve", "-i", s(&i), "--algo", "brute"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "MATCH\nalgorithm brute\nwildcards 0\n");
}

#[test]
fn solve_then_verify() {
    let dir = TempDir::new().unwrap();
    let instances = [
        "text x y y x\npattern a b a\n",
        "wildcards 1\ntext x y y z\npattern a b a\n",
        "variant gpm\nwildcards 2\nmax_wildcard_len 2\ntext x y x y y x\npattern a b a c\n",
        "allow_empty_wildcard 1\nwildcards 1\nmax_letter_len 1\ntext x y\npattern a b c\n",
    ];
    for (n, src) in instances.iter().enumerate() {
        let i = file(&dir, &format!("i{n}.txt"), src);
        for algo in ["auto", "enum", "anchored", "brute"] {
            let w = dir.path().join(format!("w{n}{algo}.txt"));
            let r = gfm(&["solve", "-i", s(&i), "--algo", algo, "-w", s(&w)]);
            assert_eq!(r.code, 0, "{src} {algo}: {}", r.stderr);
            let v = gfm(&["verify", "-i", s(&i), "-w", s(&w)]);
            assert_eq!((v.code, v.stdout.as_str()), (0, "PASS\n"), "{src} {algo}");
        }
    }
}

#[test]
fn verify_reports_the_mismatch_offset() {
    let dir = TempDir::new().unwrap();
    let i = file(&dir, "i.txt", "text x y y x\npattern a b a\n");
    let w = file(&dir, "w.txt", "MATCH\nmap a x\nmap b y\n");
    let r = gfm(&["verify", "-i", s(&i), "-w", s(&w)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "FAIL: concatenation mismatch at text offset 2\n");

    let gpm = file(&dir, "g.txt", "variant gpm\ntext x x\npattern a b\n");
    let w = file(&dir, "w2.txt", "MATCH\nmap a x\nmap b x\n");
    let r = gfm(&["verify", "-i", s(&gpm), "-w", s(&w)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("injectivity"), "{}", r.stdout);
}

#[test]
fn strict_injectivity_covers_wildcards() {
    let dir = TempDir::new().unwrap();
    let i = file(&dir, "i.txt", "variant gpm\nwildcards 1\ntext x x\npattern a b\n");
    let w = file(&dir, "w.txt", "MATCH\nmap a x\nwild 2 x\n");
    assert_eq!(gfm(&["verify", "-i", s(&i), "-w", s(&w)]).code, 0);
    assert_eq!(gfm(&["verify", "-i", s(&i), "-w", s(&w), "--strict-injective"]).code, 1);
}

#[test]
fn min_wildcards_prints_optimum_and_budget() {
    let dir = TempDir::new().unwrap();
    let i = file(&dir, "i.txt", "wildcards 0\ntext x y y z\npattern a b a\n");
    let w = dir.path().join("w.txt");
    let r = gfm(&["solve", "-i", s(&i), "--algo", "brute", "-w", s(&w)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "NOMATCH\nalgorithm brute\n"));
    assert_eq!(fs::read_to_string(&w).unwrap(), "NOMATCH\n");
    let r = gfm(&["solve", "-i", s(&i), "--min-wildcards"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.ends_with("min_wildcards 1\nbudget 0\n"), "{}", r.stdout);
}

#[test]
fn params() {
    let dir = TempDir::new().unwrap();
    let i = file(
        &dir,
        "i.txt",
        "wildcards 1\nmax_letter_len 2\ntext x y y z\npattern a b a\n",
    );
    let r = gfm(&["params", "-i", s(&i)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "occt 2\nsigt 3\noccp 2\nsigp 2\nmaxfp 2\nnumq 1\nmaxfq inf\n");
}

#[test]
fn classify_builtin_and_custom_rows() {
    let r = gfm(&["classify", "--problem", "both"]);
    assert!(r.stdout.starts_with("gfm: "), "{}", r.stdout);
    assert!(r.stdout.lines().next().unwrap().contains("; gpm: "));

    let dir = TempDir::new().unwrap();
    let rows = file(
        &dir,
        "rows.txt",
        "row fpt both occt\nrow w1 both sigt,occp,sigp,maxfp,numq,maxfq\n",
    );
    let r = gfm(&["classify", "--problem", "both", "--rows", s(&rows)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "gfm: 128/128 covered; gpm: 128/128 covered\n");

    let partial = file(&dir, "partial.txt", "row fpt gfm occt,sigt\n");
    let r = gfm(&["classify", "--problem", "gfm", "--rows", s(&partial)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("gfm: 32/128 covered\n"), "{}", r.stdout);
}

const PATH: &str = "k 2\npart 1 a b\npart 2 c d\nedge a c\nedge b d\n";
const EMPTYISH: &str = "k 3\npart 1 a\npart 2 b\npart 3 c\nedge a b\nedge b c\n";

#[test]
fn generate_then_solve() {
    let dir = TempDir::new().unwrap();
    for (name, graph, clique) in [("path", PATH, true), ("open", EMPTYISH, false)] {
        let g = file(&dir, &format!("{name}.graph"), graph);
        for kind in ["qmark", "mobile1", "mobile2", "occtmax", "qmarksize"] {
            for problem in ["gfm", "gpm"] {
                let out = dir.path().join(format!("{name}-{kind}-{problem}.txt"));
                let r = gfm(&[
                    "generate",
                    "--reduction",
                    kind,
                    "-g",
                    s(&g),
                    "-o",
                    s(&out),
                    "--problem",
                    problem,
                    "--emit-expected",
                ]);
                assert_eq!(r.code, 0, "{kind}: {}", r.stderr);
                let expected = PathBuf::from(format!("{}.witness", out.display()));
                let head = fs::read_to_string(&expected).unwrap();
                assert_eq!(head.starts_with("MATCH"), clique);
                if clique {
                    assert_eq!(gfm(&["verify", "-i", s(&out), "-w", s(&expected)]).code, 0);
                }
                let r = gfm(&["solve", "-i", s(&out), "--algo", "brute"]);
                assert_eq!(
                    r.code,
                    if clique { 0 } else { 1 },
                    "{kind} {problem} {name}: {}",
                    r.stderr
                );
            }
        }
    }
}

#[test]
fn generate_pads_irregular_graphs() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.graph", "k 2\npart 1 a b\npart 2 c\nedge a c\n");
    let out = dir.path().join("i.txt");
    let r = gfm(&["generate", "--reduction", "mobile1", "-g", s(&g), "-o", s(&out)]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("padded"));
    assert_eq!(gfm(&["solve", "-i", s(&out), "--algo", "brute"]).code, 0);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(gfm(&[]).code, 2);
    assert_eq!(gfm(&["solve"]).code, 2);
    assert_eq!(gfm(&["solve", "-i", "/nonexistent/instance"]).code, 2);
    let bad = file(&dir, "bad.txt", "text x\n");
    let r = gfm(&["solve", "-i", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("pattern"));

    let i = file(&dir, "i.txt", "wildcards 1\ntext x y y z x y\npattern a b a c\n");
    assert_eq!(
        gfm(&["solve", "-i", s(&i), "--algo", "brute", "--max-nodes", "1"]).code,
        3
    );

    let text: Vec<String> = (0..600).map(|v| format!("t{v}")).collect();
    let pattern: Vec<String> = (0..300).map(|v| format!("p{v}")).collect();
    let big = file(
        &dir,
        "big.txt",
        &format!("text {}\npattern {}\n", text.join(" "), pattern.join(" ")),
    );
    let r = gfm(&["solve", "-i", s(&big)]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    assert!(r.stderr.contains("not applicable"));

    assert_eq!(gfm(&["--help"]).code, 0);
}

#[test]
fn jobs_do_not_change_output() {
    let dir = TempDir::new().unwrap();
    let i = file(
        &dir,
        "i.txt",
        "variant gpm\nwildcards 2\nmax_letter_len 2\ntext x y z y x z z y\npattern a b c b a\n",
    );
    for algo in ["enum", "anchored"] {
        let w1 = dir.path().join(format!("{algo}1"));
        let w4 = dir.path().join(format!("{algo}4"));
        let one = gfm(&["solve", "-i", s(&i), "--algo", algo, "-w", s(&w1)]);
        let four = gfm(&["solve", "-i", s(&i), "--algo", algo, "--jobs", "4", "-w", s(&w4)]);
        assert_eq!(one.stdout, four.stdout);
        assert_eq!(fs::read(&w1).unwrap(), fs::read(&w4).unwrap(), "{algo}");
        let again = gfm(&["solve", "-i", s(&i), "--algo", algo]);
        assert_eq!(again.stdout, one.stdout);
    }
}
