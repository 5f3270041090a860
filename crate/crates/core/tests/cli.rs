use std::io::Write;
use std::process::{Command, Output};

fn limitlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limitlab")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = limitlab(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["density", "--kind", "ind", "-F", "path:4", "-G", "path:4"]), "1/12\n");
    assert_eq!(stdout(&["gdensity", "--kind", "tind", "-F", "cycle:4", "-W", "named:chordal_two_point"]), "0\n");
    let prf = stdout(&["prf", "-F", "named:F12", "--parts", "0,1,2,3,4,5/6,7,8,9,10,11", "--family", "path:4"]);
    let nodes: u64 = prf.trim().strip_prefix("PRF-HOLDS nodes=").unwrap().parse().unwrap();
    assert!(nodes > 0);
}

#[test]
fn exit_codes() {
    assert_eq!(limitlab(&["nope"]).status.code(), Some(2));
    assert_eq!(limitlab(&["recognize", "--class", "nope", "-G", "path:3"]).status.code(), Some(2));
    let bad = limitlab(&["gdensity", "--kind", "t", "-F", "path:2", "-W", "/nonexistent/w.txt"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(String::from_utf8(bad.stderr).unwrap().lines().count(), 1);
}

#[test]
fn files_as_inputs() {
    let dir = std::env::temp_dir().join(format!("limitlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("p4.txt");
    std::fs::File::create(&graph).unwrap().write_all(b"4 3\n0 1\n1 2\n2 3\n").unwrap();
    let g6 = dir.join("c4.g6");
    std::fs::write(&g6, "Cl\n").unwrap();
    let w = dir.join("w.txt");
    std::fs::write(&w, "2\n1/2 1/2\n0 1/2\n1/2 1\n").unwrap();
    let bad_w = dir.join("bad.txt");
    std::fs::write(&bad_w, "2\n1/2 1/3\n0 1/2\n1/2 1\n").unwrap();

    let (g, c, wf, bad) = (graph.to_str().unwrap(), g6.to_str().unwrap(), w.to_str().unwrap(), bad_w.to_str().unwrap());
    assert_eq!(stdout(&["density", "--kind", "ind", "-F", g, "-G", "path:4"]), "1/12\n");
    assert_eq!(stdout(&["recognize", "--class", "chordal", "-G", c]), "false\n");
    assert_eq!(stdout(&["gdensity", "--kind", "tind", "-F", "path:4", "-W", wf]), "1/256\n");
    assert_eq!(limitlab(&["gdensity", "--kind", "t", "-F", "path:2", "-W", bad]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeded_output_is_reproducible() {
    let args = ["dichotomy", "-W", "named:constant:1/2", "--class", "chordal", "--n", "10,20,30", "--trials", "50", "--seed", "9"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let ns: Vec<&str> = a.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(ns, ["10", "20", "30"]);
    let s = ["sample", "-W", "named:threshold_staircase:4", "-n", "12", "--seed", "3", "--emit", "edgelist"];
    assert_eq!(stdout(&s), stdout(&s));
}

#[test]
fn catalog_and_ptwin() {
    let cat = stdout(&["catalog"]);
    for name in ["cograph_certificate_F12", "chordal_two_point", "unit_interval"] {
        assert!(cat.contains(name));
    }
    assert_eq!(stdout(&["ptwin", "--class", "threshold", "--nmax", "5"]), "ok\n");
}
