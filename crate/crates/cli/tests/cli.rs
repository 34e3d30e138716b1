use std::process::{Command, Output};

use serde_json::Value;

fn markov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_markov")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = markov(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn lines(args: &[&str]) -> Vec<Value> {
    let out = markov(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn continuant_reports() {
    let v = json(&["continuant", "2,2,3,3"]);
    assert_eq!((v["K"].as_str(), v["breve"].as_str(), v["trace_coefficient"].as_str()), (Some("56"), Some("17"), Some("63")));
    assert_eq!(json(&["continuant", "4,4,(11)^8"])["breve"], "355318099");
    let v = json(&["continuant", "7"]);
    assert_eq!((v["K"].as_str(), v["breve"].as_str()), (Some("7"), Some("1")));
}

#[test]
fn diagram_reports() {
    let v = json(&["diagram", "2,2,3,3,3,3"]);
    assert_eq!(v["matrix"], serde_json::json!([["76", "251"], ["185", "611"]]));
    assert_eq!(v["form"]["B"], "535");
    assert_eq!(v["spectrum"]["N"], "471965");
    assert_eq!(v["spectrum"]["d"], "185");
    let v = json(&["diagram", "1,1"]);
    assert_eq!((v["spectrum"]["N"].as_str(), v["spectrum"]["d"].as_str()), (Some("5"), Some("1")));
    assert_eq!(v["extremal"], true);
    let v = json(&["diagram", "1,1,2,2,2,2,1,1,2,2"]);
    assert_eq!(v["extremal"], false);
    assert!(v["witnesses"].as_array().unwrap().contains(&serde_json::json!(["17", "29"])));
}

#[test]
fn trees() {
    let nodes = lines(&["tree", "markov", "--depth", "2"]);
    assert_eq!(nodes.len(), 7);
    let middles: Vec<&str> = nodes.iter().map(|n| n["middle"].as_str().unwrap()).collect();
    assert_eq!(middles, ["5", "13", "29", "34", "194", "433", "169"]);
    assert_eq!(nodes[0]["code"], "(0,0)");
    assert_eq!(nodes[0]["coordinate"], "1/2");

    let nodes = lines(&["tree", "genmarkov", "--mu", "4,4", "--nu", "11,11", "--depth", "1"]);
    assert_eq!(nodes.len(), 3);
    let b = |n: &Value, k: &str| n[k]["breve"].as_str().unwrap().to_string();
    assert_eq!((b(&nodes[0], "left"), b(&nodes[0], "middle"), b(&nodes[0], "right")), ("4".into(), "191".into(), "11".into()));

    let nodes = lines(&["tree", "farey", "--depth", "1"]);
    assert_eq!(nodes[0]["middle"], "1/2");
    assert_eq!(nodes[1]["middle"], "1/3");
    assert_eq!(nodes[2]["middle"], "2/3");

    let nodes = lines(&["tree", "matrix", "--depth", "0"]);
    assert_eq!(nodes[0]["middle"], serde_json::json!([["3", "7"], ["5", "12"]]));
    let nodes = lines(&["tree", "seq", "--depth", "1"]);
    assert_eq!(nodes[1]["middle"], "(1)^4,2,2");
}

#[test]
fn collision_reports() {
    let v = json(&["collisions", "--mu", "4,4", "--nu", "11,11", "--depth", "10"]);
    let g = v["groups"]
        .as_array()
        .unwrap()
        .iter()
        .find(|g| g["key"][0] == "355318099")
        .expect("group present");
    let seqs: Vec<&str> = g["members"].as_array().unwrap().iter().map(|m| m["sequence"].as_str().unwrap()).collect();
    assert_eq!(seqs, ["(4)^12,11,11", "4,4,(11)^8"]);
    let bs: Vec<&str> = g["members"].as_array().unwrap().iter().map(|m| m["form"]["B"].as_str().unwrap()).collect();
    let mut bs = bs;
    bs.sort();
    assert_eq!(bs, ["3856242857", "3856825285"]);

    let v = json(&["collisions", "--mu", "1,1", "--nu", "2,2", "--depth", "10"]);
    assert!(v["groups"].as_array().unwrap().is_empty());

    let v = json(&["collisions"]);
    assert!(v["groups"].as_array().unwrap().iter().any(|g| g["key"][0] == "661068612553111"));
}

#[test]
fn classical_reports() {
    let v = json(&["classical", "--triple", "1,5,2"]);
    assert_eq!((v["u"].as_str(), v["v"].as_str()), (Some("2"), Some("1")));
    assert_eq!(v["period"], "1,1,2,2");
    assert_eq!((v["Y"]["N"].as_str(), v["Y"]["d"].as_str()), (Some("221"), Some("5")));
    let v = json(&["classical", "--triple", "2,29,5"]);
    assert_eq!((v["Y"]["N"].as_str(), v["Y"]["d"].as_str()), (Some("7565"), Some("29")));
    assert_eq!(markov(&["classical", "--triple", "2,3,4"]).status.code(), Some(3));
}

#[test]
fn perron_sail_graph_and_reconstruct() {
    let v = json(&["perron", "2,2,3,3"]);
    assert_eq!(v["matches_map_w"], true);
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);

    let dir = std::env::temp_dir().join(format!("markov-sail-{}.svg", std::process::id()));
    let v = json(&["sail", "1,1,2,2", "--svg", dir.to_str().unwrap()]);
    assert!(v["lls"].as_str().unwrap().contains("1,1,2,2"));
    assert!(std::fs::read_to_string(&dir).unwrap().starts_with("<svg"));
    std::fs::remove_file(&dir).ok();

    let v = json(&["verify-graph", "--mu", "1,1", "--nu", "2,2", "--depth", "4"]);
    assert_eq!(v["markov"], true);
    let v = json(&["verify-graph", "--mu", "4,4", "--nu", "11,11", "--depth", "4"]);
    assert_eq!(v["almost_markov"], true);

    let v = json(&["reconstruct", "1,1,1,1,2,2"]);
    assert_eq!(v["code"], "(1,0)");
    assert_eq!(markov(&["reconstruct", "3,3"]).status.code(), Some(3));
}

#[test]
fn exit_codes_and_limits() {
    assert_eq!(markov(&["continuant", "2,,3"]).status.code(), Some(2));
    assert_eq!(markov(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(markov(&["diagram", "1,2,3"]).status.code(), Some(3));
    assert_eq!(markov(&["tree", "markov", "--depth", "17"]).status.code(), Some(4));
    assert_eq!(markov(&["--max-depth", "2", "tree", "farey", "--depth", "3"]).status.code(), Some(4));
    let out = markov(&["collisions", "--full", "--depth", "10", "--node-budget", "100"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn output_is_deterministic_and_tabular() {
    let a = markov(&["tree", "genmarkov", "--depth", "5"]);
    let b = markov(&["tree", "genmarkov", "--depth", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let out = markov(&["--output", "table", "--digits", "4", "diagram", "2,2,3,3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("17x^2 + 49xy - 23y^2"), "{text}");
    assert!(text.contains("sqrt(3965)/17"), "{text}");
    let out = markov(&["--output", "table", "tree", "markov", "--depth", "0"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(0,0)\t1/2\t1\t5\t2\n");
}
