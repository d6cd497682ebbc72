use std::path::PathBuf;
use std::process::{Command, Output};

fn zforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zforge"))
        .args(args)
        .env_remove("ZFORGE_BUDGET")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn z_prints_json() {
    let o = zforge(&["z", "8", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["z"], 30);
    assert_eq!(v["regime"], "above-case1");
    assert!(String::from_utf8_lossy(&o.stdout).starts_with(r#"{"z":30,"regime":"#));
}

#[test]
fn uncovered_and_inadmissible_exit_2() {
    assert_eq!(zforge(&["z", "8", "3"]).status.code(), Some(2));
    let o = zforge(&["gdd", "4^2 2^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("u ≡ 2 (mod 3)"));
}

#[test]
fn usage_exit_4() {
    assert_eq!(zforge(&["construct", "8"]).status.code(), Some(4));
    assert_eq!(zforge(&["z", "x", "1"]).status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    for args in [&["construct", "14", "40"][..], &["gdd", "4^3 2^6"], &["table", "90", "100"], &["oracle", "6", "7"]] {
        let a = zforge(args);
        let b = zforge(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn round_trip_and_mutations() {
    for (m, n) in [(8, 11), (9, 14), (13, 40)] {
        let path = scratch(&format!("w{m}_{n}.json"));
        let p = path.to_str().unwrap();
        let o = zforge(&["construct", &m.to_string(), &n.to_string(), "--out", p]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let o = zforge(&["verify", p]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));

        let original = std::fs::read(&path).unwrap();
        let start = original.windows(8).position(|w| w == b"\"edges\":").unwrap() + 8;
        let end = original.len() - 1;
        let bad = scratch(&format!("bad{m}_{n}.json"));
        let b = bad.to_str().unwrap();
        for i in start..end {
            let mut text = original.clone();
            text[i] = match text[i] {
                b'0'..=b'8' => text[i] + 1,
                b'9' => b'0',
                b',' => b' ',
                b'[' => b'{',
                b']' => b'[',
                _ => b'x',
            };
            std::fs::write(&bad, &text).unwrap();
            let o = zforge(&["verify", b]);
            assert_eq!(
                o.status.code(),
                Some(1),
                "byte {i} of ({m}, {n}): {}",
                String::from_utf8_lossy(&text)
            );
        }
    }
}

#[test]
fn tampered_file_lists_failures() {
    let path = scratch("tamper.json");
    std::fs::write(&path, "{\"m\":4,\"n\":2,\"z\":5,\"construction\":\"x\",\"seed\":null,\"edges\":[[0,1,2],[0,1]]}\n").unwrap();
    let o = zforge(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}
