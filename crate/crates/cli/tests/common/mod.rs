#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary inside `tests/data` with `PEANO_FORGE_ENUM_CAP` cleared.
pub fn run(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_peano-forge"));
    cmd.args(args)
        .current_dir(data_dir())
        .env_remove("PEANO_FORGE_ENUM_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn peano-forge");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub struct Case {
    pub args: &'static [&'static str],
    pub env: &'static [(&'static str, &'static str)],
    pub exit: i32,
    /// Exact stdout, when given.
    pub stdout: Option<&'static str>,
    pub stderr_has: Option<&'static str>,
}

const fn ok(args: &'static [&'static str], stdout: &'static str) -> Case {
    Case {
        args,
        env: &[],
        exit: 0,
        stdout: Some(stdout),
        stderr_has: None,
    }
}

const fn fails(args: &'static [&'static str], exit: i32, stderr_has: &'static str) -> Case {
    Case {
        args,
        env: &[],
        exit,
        stdout: Some(""),
        stderr_has: Some(stderr_has),
    }
}

pub const PENTAGON: &str = "5 2 2
0 1 : 0
0 2 : 0
0 3 : 1
0 4 : 1
1 2 : 1
1 3 : 0
1 4 : 1
2 3 : 1
2 4 : 0
3 4 : 0
";

/// One case per documented command example.
pub fn documented_examples() -> Vec<Case> {
    vec![
        ok(&["parse", "(0 = 0)"], "Eq(Zero, Zero)\n"),
        fails(&["parse", "(0 ="], 1, "SyntaxError at byte 4"),
        ok(
            &["parse", "--json", "(0 < 1)"],
            "{\"args\":[{\"args\":[],\"kind\":\"Zero\"},{\"args\":[],\"kind\":\"One\"}],\"kind\":\"Lt\"}\n",
        ),
        ok(&["encode", "formula", "(0 = 0)"], "2430\n"),
        ok(&["decode", "formula", "2430"], "(0 = 0)\n"),
        ok(&["encode", "seq", "3", "1"], "144\n"),
        ok(&["pr-eval", "add.pr", "2", "3"], "5\n"),
        Case {
            args: &["pr-eval", "diverge.pr", "--fuel", "100"],
            env: &[],
            exit: 1,
            stdout: Some("budget-exhausted\n"),
            stderr_has: None,
        },
        fails(&["pr-eval", "add.pr", "2"], 1, "ArityMismatch"),
        ok(&["ramsey", "--m", "6", "--k", "3", "--r", "2", "--n", "2"], "true\n"),
        Case {
            args: &["ramsey", "--m", "5", "--k", "3", "--r", "2", "--n", "2"],
            env: &[],
            exit: 0,
            stdout: Some(concat!("false\n", "5 2 2\n0 1 : 0\n0 2 : 0\n0 3 : 1\n0 4 : 1\n1 2 : 1\n1 3 : 0\n1 4 : 1\n2 3 : 1\n2 4 : 0\n3 4 : 0\n")),
            stderr_has: None,
        },
        ok(&["ramsey", "--find-min", "--k", "3", "--r", "2", "--n", "2", "--max-m", "10"], "6\n"),
        ok(
            &["check-homog", "constant.txt", "3", "4", "5"],
            "{\"set\":[3,4,5],\"homogeneous\":true,\"color\":0,\"size\":3,\"relatively_large\":true}\n",
        ),
        ok(
            &["check-homog", "pentagon.txt", "0", "1", "2"],
            "{\"set\":[0,1,2],\"homogeneous\":false,\"color\":null,\"size\":3,\"relatively_large\":true}\n",
        ),
        ok(
            &["check-homog", "constant.txt", "4", "5", "6"],
            "{\"set\":[4,5,6],\"homogeneous\":true,\"color\":0,\"size\":3,\"relatively_large\":false}\n",
        ),
    ]
}

/// Further commands and the exit-code contract on malformed input.
pub fn contract_cases() -> Vec<Case> {
    vec![
        ok(&["pair", "1", "2"], "8\n"),
        ok(&["pair", "0", "0"], "0\n"),
        ok(&["unpair", "8"], "1 2\n"),
        ok(&["--json", "unpair", "8"], "{\"x\":\"1\",\"y\":\"2\"}\n"),
        ok(&["decode", "seq", "144"], "3 1\n"),
        ok(&["encode", "set", "2", "3"], "108\n"),
        ok(&["decode", "set", "108"], "2 3\n"),
        ok(&["fastgrow", "3", "2"], "65534\n"),
        ok(&["fastgrow", "1", "3"], "8\n"),
        ok(&["ph", "--find-min", "--k", "3", "--r", "2", "--n", "2", "--max-m", "10"], "6\n"),
        ok(&["ph", "--m", "6", "--k", "3", "--r", "2", "--n", "2", "--jobs", "3"], "true\n"),
        ok(&["--json", "pr-eval", "add.pr", "20", "22"], "{\"outcome\":\"value\",\"value\":\"42\"}\n"),
        // usage errors
        fails(&[], 2, "Usage"),
        fails(&["frobnicate"], 2, "unrecognized subcommand"),
        fails(&["parse"], 2, "required"),
        fails(&["encode", "seq", "x"], 2, "invalid value"),
        fails(&["decode", "formula", "-5"], 2, ""),
        fails(&["pair", "1"], 2, "required"),
        fails(&["ramsey", "--m", "5"], 2, "required"),
        fails(&["ramsey", "--k", "3", "--r", "2", "--n", "2"], 2, "--m"),
        fails(&["ramsey", "--m", "6", "--k", "3", "--r", "2", "--n", "2", "--jobs", "0"], 2, "invalid value"),
        Case {
            args: &["ramsey", "--m", "5", "--k", "3", "--r", "2", "--n", "2"],
            env: &[("PEANO_FORGE_ENUM_CAP", "lots")],
            exit: 2,
            stdout: Some(""),
            stderr_has: Some("PEANO_FORGE_ENUM_CAP"),
        },
        // domain errors
        fails(&["decode", "formula", "10"], 1, "NotACode"),
        fails(&["decode", "formula", "2048"], 1, "NotACode"),
        fails(&["decode", "seq", "10"], 1, "NotASeq"),
        fails(&["encode", "set", "3", "2"], 1, "NotIncreasing"),
        fails(&["parse", "forall y (0 = 0)"], 1, "SyntaxError"),
        fails(&["pr-eval", "bad.pr"], 1, "SyntaxError"),
        fails(&["pr-eval", "missing.pr"], 1, "IoError"),
        fails(&["check-homog", "missing.txt", "1"], 1, "IoError"),
        fails(&["check-homog", "bad.txt", "0", "1"], 1, "BadPartitionFile"),
        fails(&["check-homog", "pentagon.txt", "2", "1"], 1, "BadSubset"),
        fails(&["check-homog", "pentagon.txt", "0", "9"], 1, "BadSubset"),
        fails(&["check-homog", "pentagon.txt", "3"], 1, "BadSubset"),
        fails(&["ramsey", "--m", "3", "--k", "4", "--r", "2", "--n", "2"], 1, "InvalidParameters"),
        fails(
            &["ramsey", "--m", "9", "--k", "4", "--r", "3", "--n", "3"],
            1,
            "exceed the cap of 1073741824",
        ),
        Case {
            args: &["ramsey", "--m", "5", "--k", "3", "--r", "2", "--n", "2"],
            env: &[("PEANO_FORGE_ENUM_CAP", "1000")],
            exit: 1,
            stdout: Some(""),
            stderr_has: Some("SearchSpaceTooLarge: 1024 colorings exceed the cap of 1000"),
        },
        fails(&["fastgrow", "3", "5", "--max-iterations", "1000"], 1, "BudgetExceeded"),
        fails(&["encode", "partition", "missing.txt"], 1, "IoError"),
    ]
}

/// Checks one case; the error names what differed.
pub fn check(case: &Case) -> Result<(), String> {
    let out = run(case.args, case.env);
    let label = format!("{:?}", case.args);
    if out.stderr.contains("panicked") {
        return Err(format!("{label}: panicked: {}", out.stderr));
    }
    if out.code != case.exit {
        return Err(format!(
            "{label}: exit {} instead of {} (stderr: {})",
            out.code, case.exit, out.stderr
        ));
    }
    if let Some(want) = case.stdout {
        if out.stdout != want {
            return Err(format!("{label}: stdout {:?} instead of {want:?}", out.stdout));
        }
    }
    if let Some(want) = case.stderr_has {
        if !out.stderr.contains(want) {
            return Err(format!("{label}: stderr {:?} lacks {want:?}", out.stderr));
        }
    }
    Ok(())
}

pub mod oracle;
