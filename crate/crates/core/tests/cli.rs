use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

fn starlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn temp_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn mousetrap_csv_is_the_mouse_set() {
    let o = starlab(&["solve", "--game", "mousetrap", "--bound", "600", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y"));
    let got: Vec<(u32, u32)> = lines
        .map(|l| {
            let (x, y) = l.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    let mut want = BTreeSet::from([(0, 0)]);
    for i in 1..=600u32 {
        if 3 * i - 1 <= 600 {
            want.insert((3 * i / 2, 3 * i - 1));
            want.insert((3 * i - 1, 3 * i / 2));
        }
    }
    assert_eq!(got, want.into_iter().collect::<Vec<_>>());
}

#[test]
fn output_is_deterministic() {
    let a = starlab(&["solve", "--game", "wstar", "--bound", "400"]);
    let b = starlab(&["solve", "--game", "wstar", "--bound", "400", "--threads", "1"]);
    let c = starlab(&["solve", "--game", "wstar", "--bound", "400", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let p1 = starlab(&["plot", "--game", "subsided:3", "--bound", "60", "--show-moves"]);
    let p2 = starlab(&["plot", "--game", "subsided:3", "--bound", "60", "--show-moves"]);
    assert_eq!(p1.stdout, p2.stdout);
    assert!(stdout(&p1).starts_with("<svg"));
}

#[test]
fn csv_round_trip_through_a_move_file() {
    let solved = starlab(&["solve", "--game", "mouse-trap", "--bound", "200"]);
    let path = temp_file("mouse.csv");
    std::fs::write(&path, &solved.stdout).unwrap();
    let again = starlab(&["moves", "--moves-file", path.to_str().unwrap(), "--bound", "200"]);
    assert_eq!(again.status.code(), Some(0));
    // the origin is never a move
    let want = stdout(&solved).replacen("x,y\n0,0\n", "x,y\n", 1);
    assert_eq!(stdout(&again), want);

    let text_out = starlab(&["solve", "--game", "mouse-trap", "--bound", "200", "--format", "ascii"]);
    let path = temp_file("mouse.txt");
    std::fs::write(&path, &text_out.stdout).unwrap();
    let from_text = starlab(&["moves", "--moves-file", path.to_str().unwrap(), "--bound", "200"]);
    assert_eq!(stdout(&from_text), want);
}

#[test]
fn json_move_file_symmetric_flag() {
    let path = temp_file("moves.json");
    std::fs::write(&path, r#"{"moves": [[1, 2]], "symmetric": true}"#).unwrap();
    let o = starlab(&["moves", "--moves-file", path.to_str().unwrap(), "--bound", "5"]);
    assert_eq!(stdout(&o), "x,y\n1,2\n2,1\n");
}

#[test]
fn exit_statuses() {
    assert_eq!(starlab(&["verify", "nimstar", "--piles", "3", "--bound", "16"]).status.code(), Some(0));
    assert_eq!(starlab(&["solve", "--game", "no-such-game"]).status.code(), Some(2));
    assert_eq!(starlab(&["solve"]).status.code(), Some(2));
    assert_eq!(starlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(starlab(&["table1", "--count", "200", "--bound", "50"]).status.code(), Some(2));
    assert_eq!(starlab(&["plot", "--game", "wstar", "--format", "csv"]).status.code(), Some(2));
    let ceiling = starlab(&["solve", "--game", "wstar", "--bound", "1000", "--mem-limit", "1K"]);
    assert_eq!(ceiling.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&ceiling.stderr).contains("bytes"));
    assert_eq!(starlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn verification_mismatch_exits_one_with_details() {
    let o = starlab(&["verify", "wstar-families", "--bound", "200"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("FAIL wstar-families"));
    assert!(text.contains("(1, 2)"), "{text}");
}

#[test]
fn table1_csv_header_and_first_rows() {
    let o = starlab(&["table1", "--count", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,a,a_fib,b,b_fib\n1,1,1,1,1\n2,3,100,3,100\n3,3,100,4,101\n");
}

#[test]
fn pile_games_and_json() {
    let o = starlab(&["solve", "--game", "nimstar:3", "--bound", "2"]);
    let text = stdout(&o);
    assert!(text.starts_with("x1,x2,x3\n0,0,0\n0,0,1\n"));
    // at most one nonempty pile: 1 + 3 * 2 positions
    assert_eq!(text.lines().count(), 1 + 7);
    let j = starlab(&["solve", "--game", "wythoff", "--bound", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["p_positions"][1], serde_json::json!([1, 2]));
}

#[test]
fn out_flag_writes_file() {
    let path = temp_file("out.csv");
    let o = starlab(&["solve", "--game", "wythoff", "--bound", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "x,y\n0,0\n1,2\n2,1\n3,5\n5,3\n");
}
