mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::data_path;
use mcbc::io::code_from_json;
use mcbc::{serve_request, MultisetRequest};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn mcbc(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = mcbc::cli::run(
        std::iter::once("mcbc").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    data_path(name).to_str().unwrap().to_string()
}

/// Runs the real binary with `input` on stdin.
fn mcbc_bin(args: &[&str], input: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mcbc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    (
        output.status.code().unwrap(),
        String::from_utf8(output.stdout).unwrap(),
    )
}

#[test]
fn construct_diagonal() {
    let run = mcbc(&[
        "construct",
        "--method",
        "diagonal",
        "--n",
        "4",
        "--k",
        "5",
        "--r",
        "2",
    ]);
    assert_eq!(run.code, 0);
    let code = code_from_json(&run.out).unwrap();
    assert_eq!((code.n(), code.m(), code.storage()), (4, 5, 10));
    assert_eq!(
        code.item_view().blocks(),
        [vec![1, 2], vec![3, 4], vec![2, 4, 5], vec![1, 3, 5]]
    );
    assert_eq!(run.err.trim(), "n=4 m=5 N=10 k=5 r=2");
}

#[test]
fn construct_affine_plane() {
    let run = mcbc(&[
        "construct",
        "--method",
        "steiner-affine",
        "--q",
        "4",
        "--k",
        "7",
        "--r",
        "4",
    ]);
    assert_eq!(run.code, 0);
    let code = code_from_json(&run.out).unwrap();
    assert_eq!((code.n(), code.m(), code.storage()), (20, 16, 80));
}

#[test]
fn construct_replication() {
    let run = mcbc(&[
        "construct",
        "--method",
        "replication",
        "--n",
        "6",
        "--k",
        "3",
        "--m",
        "4",
        "--r",
        "2",
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(code_from_json(&run.out).unwrap().storage(), 12);
}

#[test]
fn construct_other_methods() {
    for args in [
        &["--method", "small-n", "--n", "3", "--k", "3", "--m", "4"][..],
        &[
            "--method", "cwc-gs", "--n", "3", "--k", "4", "--m", "7", "--r", "2",
        ],
        &[
            "--method",
            "distance4",
            "--n",
            "8",
            "--k",
            "4",
            "--m",
            "5",
            "--r",
            "2",
        ],
        &["--method", "regular", "--n", "3", "--k", "4", "--m", "6"],
    ] {
        let run = mcbc(&[&["construct"][..], args].concat());
        assert_eq!(run.code, 0, "{args:?}: {}", run.err);
        code_from_json(&run.out).unwrap();
    }
}

#[test]
fn construct_failures() {
    // Precondition failures name the condition and exit 3.
    let run = mcbc(&[
        "construct",
        "--method",
        "replication",
        "--n",
        "5",
        "--k",
        "3",
        "--m",
        "4",
        "--r",
        "2",
    ]);
    assert_eq!(run.code, 3);
    assert!(run.err.contains("n >="), "{}", run.err);
    assert_eq!(
        mcbc(&[
            "construct",
            "--method",
            "regular",
            "--n",
            "5",
            "--k",
            "4",
            "--m",
            "6"
        ])
        .code,
        3
    );
    assert_eq!(
        mcbc(&[
            "construct",
            "--method",
            "small-n",
            "--n",
            "5",
            "--k",
            "4",
            "--m",
            "4"
        ])
        .code,
        3
    );
    assert_eq!(
        mcbc(&[
            "construct",
            "--method",
            "steiner-affine",
            "--q",
            "6",
            "--k",
            "3",
            "--r",
            "3"
        ])
        .code,
        3
    );
    assert_eq!(
        mcbc(&[
            "construct",
            "--method",
            "diagonal",
            "--n",
            "4",
            "--k",
            "5",
            "--m",
            "6",
            "--r",
            "2"
        ])
        .code,
        3
    );
    // Flag errors exit 2.
    let run = mcbc(&[
        "construct",
        "--method",
        "replication",
        "--k",
        "3",
        "--m",
        "4",
        "--r",
        "2",
    ]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("--n"), "{}", run.err);
    assert_eq!(mcbc(&["construct", "--method", "nope", "--n", "1"]).code, 2);
    assert_eq!(
        mcbc(&[
            "construct",
            "--method",
            "replication",
            "--n",
            "0",
            "--k",
            "3",
            "--m",
            "4",
            "--r",
            "2"
        ])
        .code,
        2
    );
    assert_eq!(mcbc(&[]).code, 2);
}

#[test]
fn verify_example_one() {
    let path = fixture("example1.json");
    for mode in ["hall", "exhaustive"] {
        let run = mcbc(&[
            "verify", "--code", &path, "--k", "5", "--r", "2", "--mode", mode,
        ]);
        assert_eq!(run.code, 0, "{mode}: {}", run.out);
        assert!(run.out.starts_with("valid\n"));
        assert!(
            run.out
                .contains("profile: A0=0 A1=0 A2=2 A3=2 A4=0 A5=1 overflow=0"),
            "{}",
            run.out
        );
        assert!(run.out.contains("profile inequality: holds"));
    }
}

#[test]
fn verify_reports_witness() {
    let path = fixture("duplicate_singleton.json");
    let run = mcbc(&["verify", "--code", &path, "--k", "2", "--r", "1"]);
    assert_eq!(run.code, 1);
    assert!(run.out.lines().any(|l| l == "blocks: 1 2"), "{}", run.out);
    let run = mcbc(&[
        "verify",
        "--code",
        &path,
        "--k",
        "2",
        "--r",
        "1",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(run.code, 1);
    assert!(run.out.lines().any(|l| l == "request: 1,2"), "{}", run.out);
}

#[test]
fn verify_affine_plane_exhaustively() {
    let path = fixture("affine4.json");
    // About 1.8e7 maximal requests: above the default cap, so raise it.
    let run = mcbc(&[
        "verify",
        "--code",
        &path,
        "--k",
        "11",
        "--r",
        "2",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(run.code, 4, "{}", run.err);
    assert!(run.err.contains("cap"), "{}", run.err);
    let run = mcbc(&[
        "verify",
        "--code",
        &path,
        "--k",
        "11",
        "--r",
        "2",
        "--mode",
        "exhaustive",
        "--cap",
        "20000000",
    ]);
    assert_eq!(run.code, 0, "{}{}", run.out, run.err);
}

#[test]
fn verify_affine_plane_beyond_tabulated_k() {
    // The exact minimum union of six blocks is 12, so r = 2 reaches k = 13.
    let path = fixture("affine4.json");
    assert_eq!(
        mcbc(&["verify", "--code", &path, "--k", "13", "--r", "2"]).code,
        0
    );
    let run = mcbc(&["verify", "--code", &path, "--k", "14", "--r", "2"]);
    assert_eq!(run.code, 1);
    assert!(run.out.lines().nth(1).unwrap().starts_with("blocks: "));
}

#[test]
fn verify_input_errors() {
    let path = fixture("example1.json");
    assert_eq!(
        mcbc(&["verify", "--code", &path, "--k", "5", "--r", "2", "--t", "2"]).code,
        2
    );
    assert_eq!(
        mcbc(&["verify", "--code", &path, "--k", "5", "--r", "6"]).code,
        2
    );
    assert_eq!(
        mcbc(&["verify", "--code", "/nonexistent/code.json", "--k", "1"]).code,
        2
    );
    assert_eq!(
        mcbc(&[
            "verify",
            "--code",
            &path,
            "--k",
            "5",
            "--r",
            "2",
            "--mode",
            "exhaustive",
            "--cap",
            "50"
        ])
        .code,
        4
    );
    let (code, _) = mcbc_bin(
        &["verify", "--code", "-", "--k", "2"],
        "{\"n\": 2, \"m\": 2, \"servers\": [[1], [3]]}",
    );
    assert_eq!(code, 2);
    let (code, _) = mcbc_bin(&["verify", "--code", "-", "--k", "2"], "not json");
    assert_eq!(code, 2);
}

#[test]
fn serve_example_one() {
    let path = fixture("example1.json");
    let run = mcbc(&["serve", "--code", &path, "--request", "3,3,4,4,5"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.out,
        "server 1: 3\nserver 2: 4\nserver 3: 3\nserver 4: 4\nserver 5: 5\n"
    );
    let run = mcbc(&["serve", "--code", &path, "--request", ""]);
    assert_eq!((run.code, run.out.as_str()), (0, ""));
}

#[test]
fn serve_failures() {
    let run = mcbc(&[
        "serve",
        "--code",
        &fixture("one_server.json"),
        "--request",
        "1,2",
    ]);
    assert_eq!((run.code, run.out.as_str()), (1, "INFEASIBLE\n"));
    let path = fixture("example1.json");
    assert_eq!(
        mcbc(&["serve", "--code", &path, "--request", "1,x"]).code,
        2
    );
    assert_eq!(mcbc(&["serve", "--code", &path, "--request", "0"]).code, 2);
    assert_eq!(mcbc(&["serve", "--code", &path, "--request", "6"]).code, 2);
    assert_eq!(
        mcbc(&["serve", "--code", &path, "--request", "1,1,1", "--r", "2"]).code,
        2
    );
    assert_eq!(
        mcbc(&["serve", "--code", &path, "--request", "1,2,3", "--k", "2"]).code,
        2
    );
    // With t = 2 a single server can read two different items.
    let run = mcbc(&[
        "serve",
        "--code",
        &fixture("one_server.json"),
        "--request",
        "1,2",
        "--t",
        "2",
    ]);
    assert_eq!((run.code, run.out.as_str()), (0, "server 1: 1 2\n"));
}

#[test]
fn bounds_reports() {
    let run = mcbc(&[
        "bounds", "--n", "4", "--k", "5", "--m", "5", "--r", "2", "--search",
    ]);
    assert_eq!(run.code, 0);
    let report: serde_json::Value = serde_json::from_str(&run.out).unwrap();
    assert_eq!(report["lower_bounds"]["rn"], 8);
    assert_eq!(report["known_exact"]["value"], 10);
    assert_eq!(report["search_exact"], 10);

    let report: serde_json::Value = serde_json::from_str(
        &mcbc(&["bounds", "--n", "12", "--k", "3", "--m", "4", "--r", "1"]).out,
    )
    .unwrap();
    assert_eq!(report["known_exact"]["value"], 24);
    assert!(report["search_exact"].is_null());
    let report: serde_json::Value = serde_json::from_str(
        &mcbc(&["bounds", "--n", "1", "--k", "1", "--m", "1", "--r", "1"]).out,
    )
    .unwrap();
    assert_eq!(report["known_exact"]["value"], 1);
}

#[test]
fn bounds_search_witness_and_caps() {
    let dir = std::env::temp_dir().join(format!("mcbc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let witness = dir.join("witness.json");
    let run = mcbc(&[
        "bounds",
        "--n",
        "3",
        "--k",
        "2",
        "--m",
        "2",
        "--r",
        "1",
        "--search",
        "--witness-out",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    let code = code_from_json(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(code.storage(), 4);
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(
        mcbc(&["bounds", "--n", "6", "--k", "3", "--m", "4", "--r", "2", "--search"]).code,
        4
    );
    assert_eq!(
        mcbc(&[
            "bounds", "--n", "6", "--k", "3", "--m", "4", "--r", "2", "--search", "--max-n", "6"
        ])
        .code,
        0
    );
    assert_eq!(
        mcbc(&["bounds", "--n", "2", "--k", "3", "--m", "2", "--r", "1"]).code,
        2
    );
}

#[test]
fn table_rows() {
    let run = mcbc(&[
        "table", "--k", "3", "--m", "4", "--r", "2", "--n-from", "6", "--n-to", "8",
    ]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.out.lines().collect();
    assert_eq!(lines[0], "n\tlower\texact\tupper");
    assert_eq!(lines[1], "6\t12\t12\t12");
    assert_eq!(lines.len(), 4);

    let run = mcbc(&[
        "table", "--k", "3", "--m", "4", "--r", "1", "--n-from", "12", "--n-to", "14",
    ]);
    for (line, n) in run.out.lines().skip(1).zip(12..) {
        let exact: u64 = line.split('\t').nth(2).unwrap().parse().unwrap();
        assert_eq!(exact, 3 * n - 12);
    }

    let run = mcbc(&[
        "table", "--k", "4", "--m", "5", "--r", "4", "--n-from", "1", "--n-to", "9",
    ]);
    for (line, n) in run.out.lines().skip(1).zip(1..) {
        assert_eq!(line.split('\t').nth(2).unwrap(), (4 * n).to_string());
    }
    assert_eq!(
        mcbc(&["table", "--k", "3", "--m", "4", "--r", "2", "--n-from", "8", "--n-to", "6"]).code,
        2
    );
}

#[test]
fn table_marks_unknown_cells() {
    // k > m: every cell fails and renders as '-'.
    let run = mcbc(&[
        "table", "--k", "5", "--m", "4", "--r", "1", "--n-from", "1", "--n-to", "2",
    ]);
    assert_eq!(run.code, 0);
    assert_eq!(run.out, "n\tlower\texact\tupper\n1\t-\t-\t-\n2\t-\t-\t-\n");
}

#[test]
fn construct_output_round_trips_through_verify() {
    let cases: &[(&[&str], &str, &str)] = &[
        (
            &[
                "--method",
                "replication",
                "--n",
                "7",
                "--k",
                "3",
                "--m",
                "4",
                "--r",
                "2",
            ],
            "3",
            "2",
        ),
        (
            &["--method", "small-n", "--n", "4", "--k", "3", "--m", "5"],
            "3",
            "2",
        ),
        (
            &["--method", "cwc-gs", "--k", "5", "--m", "8", "--r", "3"],
            "5",
            "3",
        ),
        (
            &[
                "--method",
                "distance4",
                "--n",
                "15",
                "--k",
                "4",
                "--m",
                "6",
                "--r",
                "2",
            ],
            "4",
            "2",
        ),
        (
            &["--method", "diagonal", "--n", "6", "--k", "4", "--r", "3"],
            "4",
            "3",
        ),
        (
            &[
                "--method",
                "steiner-affine",
                "--q",
                "3",
                "--k",
                "5",
                "--r",
                "3",
            ],
            "5",
            "3",
        ),
        (
            &["--method", "regular", "--n", "4", "--k", "2", "--m", "4"],
            "2",
            "2",
        ),
    ];
    for (args, k, r) in cases {
        let (code, json) = mcbc_bin(&[&["construct"][..], args].concat(), "");
        assert_eq!(code, 0, "{args:?}");
        for mode in ["hall", "exhaustive"] {
            let (code, out) = mcbc_bin(
                &["verify", "--code", "-", "--k", k, "--r", r, "--mode", mode],
                &json,
            );
            assert_eq!(code, 0, "{args:?} {mode}: {out}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let path = fixture("example1.json");
    let invocations: &[&[&str]] = &[
        &[
            "construct",
            "--method",
            "distance4",
            "--n",
            "8",
            "--k",
            "4",
            "--m",
            "5",
            "--r",
            "2",
        ],
        &[
            "bounds", "--n", "4", "--k", "4", "--m", "5", "--r", "1", "--search",
        ],
        &[
            "table", "--k", "4", "--m", "6", "--r", "2", "--n-from", "1", "--n-to", "20",
        ],
        &["serve", "--code", &path, "--request", "1,1,2,5,5"],
    ];
    for args in invocations {
        let first = mcbc(args);
        let second = mcbc(args);
        assert_eq!(first.code, 0, "{args:?}");
        assert_eq!(first.out, second.out, "{args:?}");
    }
}

#[test]
fn served_assignment_matches_library() {
    let code =
        code_from_json(&std::fs::read_to_string(data_path("affine4.json")).unwrap()).unwrap();
    let req: MultisetRequest = "1,1,2,2,17,17,18,20,20".parse().unwrap();
    let assignment = serve_request(&code, &req, 1).unwrap().unwrap();
    let run = mcbc(&[
        "serve",
        "--code",
        &fixture("affine4.json"),
        "--request",
        "1,1,2,2,17,17,18,20,20",
    ]);
    let expected: String = assignment
        .reads
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_empty())
        .map(|(j, d)| {
            format!(
                "server {}: {}\n",
                j + 1,
                d.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect();
    assert_eq!(run.out, expected);
    assert!(assignment.serves(&code, &req, 1));
}
