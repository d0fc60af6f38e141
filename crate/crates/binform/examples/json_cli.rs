//! Drive the CLI layer in-process: every subcommand is a pure function from
//! arguments to deterministic JSON, so it can be scripted without spawning.
//!
//! Run with: cargo run --example json_cli

use binform::cli::run;

fn call(args: &[&str]) -> (String, i32) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    let text = if code == 0 || err.is_empty() {
        String::from_utf8(out).unwrap()
    } else {
        String::from_utf8(err).unwrap()
    };
    (text, code)
}

fn main() {
    let demos: &[&[&str]] = &[
        &["geometric", "-d", "4"],
        &["z-of-sign", "-s", "+---+"],
        &["sys", "-d", "2"],
        &["omega", "-a", "5", "-b", "6", "-r", "2", "-s", "4", "-d", "5"],
        &["recouple", "-a", "2", "-b", "2", "-c", "2", "-r", "1", "-s", "1"],
        &[
            "sixj", "--j1", "1", "--j2", "1", "--j3", "1", "--j12", "0", "--j23", "1", "--J", "1",
        ],
        &[
            "transvect",
            "--a-json",
            r#"{"order":4,"cayley":["1","0","0","0","1"]}"#,
            "--b-json",
            r#"{"order":4,"cayley":["1","0","0","0","1"]}"#,
            "-r",
            "4",
        ],
        &[
            "verify", "-d", "4", "--z", "16,24/7,1/5", "--mode", "symbolic",
        ],
        &[
            "curve",
            "--f-json",
            r#"{"order":6,"cayley":["1","0","0","0","1/15","0","1"]}"#,
        ],
        &["paper-check"],
    ];
    for args in demos {
        let (text, code) = call(args);
        println!("$ binform {}", args.join(" "));
        print!("{text}");
        assert_eq!(code, 0, "demo command failed");
        println!();
    }

    // Determinism: running a command twice yields byte-identical output.
    let (first, _) = call(&["involutors", "-d", "6"]);
    let (second, _) = call(&["involutors", "-d", "6"]);
    assert_eq!(first, second);
    println!("involutors -d 6 is byte-identical across runs ✓");
}
