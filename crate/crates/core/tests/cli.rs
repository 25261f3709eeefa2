use std::path::{Path, PathBuf};

use multiplicity::cli::{run_cli, CliOutput, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use multiplicity::oracles::AutomatonGenerator;
use multiplicity::{parse_automaton, print_automaton, RatAutomaton};

const DOUBLING: &str = r#"{"alphabet": ["a"], "states": 1, "initial": ["1"], "final": ["1"], "transitions": {"a": [["2"]]}}"#;
const SCALED: &str = r#"{"alphabet": ["a"], "states": 1, "initial": ["2"], "final": ["1/2"], "transitions": {"a": [["2"]]}}"#;
const REDUNDANT: &str = r#"{"alphabet": ["a"], "states": 2, "initial": ["1/2", "1/2"], "final": ["1", "1"],
  "transitions": {"a": [["2", "0"], ["0", "2"]]}}"#;
const TRIPLING: &str = r#"{"alphabet": ["a"], "states": 1, "initial": ["1"], "final": ["1"], "transitions": {"a": [["3"]]}}"#;
const COUNTING: &str = r#"{"alphabet": ["a"], "states": 2, "initial": ["1", "0"], "final": ["0", "1"],
  "transitions": {"a": [["1", "1"], ["0", "1"]]}}"#;
const TWO_LETTERS: &str = r#"{"alphabet": ["b", "a"], "states": 1, "initial": ["1"], "final": ["1"],
  "transitions": {"a": [["2"]], "b": [["-1/3"]]}}"#;
const LONG_NAMES: &str = r#"{"alphabet": ["up", "down"], "states": 1, "initial": ["1"], "final": ["1"],
  "transitions": {"up": [["2"]], "down": [["3"]]}}"#;
const BAD_RATIONAL: &str = r#"{"alphabet": ["a"], "states": 1, "initial": ["x"], "final": ["1"], "transitions": {"a": [["2"]]}}"#;

struct Workspace {
    dir: PathBuf,
}

impl Workspace {
    fn new(name: &str) -> Self {
        let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{name}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        for (file, text) in [
            ("doubling.wa", DOUBLING),
            ("scaled.wa", SCALED),
            ("redundant.wa", REDUNDANT),
            ("tripling.wa", TRIPLING),
            ("counting.wa", COUNTING),
            ("two.wa", TWO_LETTERS),
            ("long.wa", LONG_NAMES),
            ("bad.wa", BAD_RATIONAL),
        ] {
            std::fs::write(dir.join(file), text).unwrap();
        }
        Self { dir }
    }

    fn path(&self, name: &str) -> String {
        self.dir.join(name).to_str().unwrap().to_string()
    }

    fn run(&self, args: &[&str]) -> CliOutput {
        let mut argv = vec!["multiplicity".to_string()];
        for a in args {
            argv.push(if a.ends_with(".wa") { self.path(a) } else { a.to_string() });
        }
        run_cli(argv)
    }
}

fn assert_output(out: &CliOutput, stdout: &str, code: i32) {
    assert_eq!(out.stdout, stdout, "stderr: {}", out.stderr);
    assert_eq!(out.code, code);
}

#[test]
fn eval_goldens() {
    let ws = Workspace::new("eval");
    assert_output(&ws.run(&["eval", "doubling.wa", "--word", "aaa"]), "8\n", EXIT_OK);
    assert_output(&ws.run(&["eval", "doubling.wa", "--word", "a.a.a"]), "8\n", EXIT_OK);
    assert_output(&ws.run(&["eval", "doubling.wa", "--word", ""]), "1\n", EXIT_OK);
    assert_output(&ws.run(&["eval", "two.wa", "--word", "ab"]), "-2/3\n", EXIT_OK);
    assert_output(&ws.run(&["eval", "long.wa", "--word", "up.down.up"]), "12\n", EXIT_OK);
    let out = ws.run(&["eval", "long.wa", "--word", "updown"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.starts_with("error: "));
    let out = ws.run(&["eval", "doubling.wa", "--word", "b"]);
    assert_eq!((out.code, out.stderr.as_str()), (EXIT_USAGE, "error: unknown symbol `b`\n"));
}

#[test]
fn decision_goldens() {
    let ws = Workspace::new("decide");
    assert_output(&ws.run(&["zero", "counting.wa"]), "nonzero\nwitness: a\n", EXIT_NEGATIVE);
    assert_output(&ws.run(&["equiv", "doubling.wa", "redundant.wa"]), "equivalent\n", EXIT_OK);
    assert_output(
        &ws.run(&["equiv", "doubling.wa", "tripling.wa"]),
        "inequivalent\ncounterexample: a\n",
        EXIT_NEGATIVE,
    );
    assert_output(&ws.run(&["equiv", "--gram", "doubling.wa", "redundant.wa"]), "equivalent\n", EXIT_OK);
    assert_output(&ws.run(&["equiv", "--gram", "doubling.wa", "tripling.wa"]), "inequivalent\n", EXIT_NEGATIVE);
    let out = ws.run(&["equiv", "doubling.wa", "two.wa"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = ws.run(&["--oracle-budget", "1", "equiv", "--gram", "doubling.wa", "redundant.wa"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("budget"));
}

#[test]
fn minimize_rank_and_hankel_goldens() {
    let ws = Workspace::new("minimize");
    let target = ws.path("min.wa");
    assert_output(&ws.run(&["minimize", "redundant.wa", "-o", &target]), "2 -> 1\n", EXIT_OK);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), print_automaton(&parse_automaton(DOUBLING).unwrap()));
    assert_output(&ws.run(&["rank", "redundant.wa"]), "1\n", EXIT_OK);
    assert_output(&ws.run(&["rank", "counting.wa"]), "2\n", EXIT_OK);
    let hankel = "complete set: {ε, a}
{
  \"alphabet\": [\"a\"],
  \"states\": 2,
  \"initial\": [\"0\", \"1\"],
  \"final\": [\"1\", \"0\"],
  \"transitions\": {
    \"a\": [
      [\"0\", \"-1\"],
      [\"1\", \"2\"]
    ]
  }
}
";
    assert_output(&ws.run(&["hankel", "counting.wa"]), hankel, EXIT_OK);
    let target = ws.path("hankel.wa");
    assert_output(&ws.run(&["hankel", "doubling.wa", "-o", &target]), "complete set: {ε}\n", EXIT_OK);
}

#[test]
fn conjugacy_goldens() {
    let ws = Workspace::new("conjugacy");
    assert_output(&ws.run(&["conjugacy", "doubling.wa", "scaled.wa"]), "1/2\n", EXIT_OK);
    let out = ws.run(&["conjugacy", "redundant.wa", "doubling.wa"]);
    assert_eq!(out.code, EXIT_NEGATIVE);
    assert!(out.stdout.starts_with("not conjugate: "));
    let out = ws.run(&["conjugacy", "doubling.wa", "tripling.wa"]);
    assert_eq!(out.code, EXIT_NEGATIVE);
    assert!(out.stdout.starts_with("not conjugate: "));
}

#[test]
fn closure_commands() {
    let ws = Workspace::new("closure");
    for (cmd, states, value) in [("sum", 3, "3"), ("diff", 3, "1"), ("product", 2, "2")] {
        let target = ws.path(&format!("{cmd}.wa"));
        assert_output(&ws.run(&[cmd, "doubling.wa", "counting.wa", "-o", &target]), &format!("{states} states\n"), EXIT_OK);
        let out = ws.run(&["eval", &target, "--word", "a"]);
        assert_output(&out, &format!("{value}\n"), EXIT_OK);
    }
    let out = ws.run(&["sum", "doubling.wa", "counting.wa"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(parse_automaton(&out.stdout).unwrap().states(), 3);
}

#[test]
fn usage_errors_exit_with_two() {
    let ws = Workspace::new("usage");
    for args in [
        vec!["rank", "bad.wa"],
        vec!["rank", "missing.wa"],
        vec!["rank"],
        vec!["frobnicate"],
        vec!["eval", "doubling.wa"],
    ] {
        let out = ws.run(&args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = ws.run(&["rank", "bad.wa"]);
    assert!(out.stderr.contains("initial[0]"), "{}", out.stderr);
    let help = ws.run(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("Usage"));
}

#[test]
fn output_is_deterministic() {
    let ws = Workspace::new("determinism");
    let mut s = AutomatonGenerator::new(11).states(1, 4).sampler();
    for i in 0..20 {
        let a: RatAutomaton = s.automaton();
        let b: RatAutomaton = s.automaton();
        let (pa, pb) = (ws.path(&format!("r{i}a.wa")), ws.path(&format!("r{i}b.wa")));
        std::fs::write(&pa, print_automaton(&a)).unwrap();
        std::fs::write(&pb, print_automaton(&b)).unwrap();
        for args in [
            vec!["zero", pa.as_str()],
            vec!["equiv", pa.as_str(), pb.as_str()],
            vec!["minimize", pa.as_str()],
            vec!["hankel", pa.as_str()],
            vec!["product", pa.as_str(), pb.as_str()],
        ] {
            let first = ws.run(&args);
            let second = ws.run(&args);
            assert_eq!(first, second, "{args:?}");
            assert_ne!(first.code, 3, "{args:?}");
        }
    }
}

#[test]
fn binary_matches_library_entry_point() {
    let ws = Workspace::new("binary");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_multiplicity"))
        .args(["equiv", &ws.path("doubling.wa"), &ws.path("tripling.wa")])
        .output()
        .unwrap();
    let lib = ws.run(&["equiv", "doubling.wa", "tripling.wa"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    assert_eq!(out.status.code(), Some(lib.code));
}
