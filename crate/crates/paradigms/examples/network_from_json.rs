//! Networks can be described as data: the same JSON format the
//! `run-network` subcommand accepts, parsed with
//! [`paradigms::dataflow::parse_network`].
//!
//! Run with `cargo run --example network_from_json`.

use paradigms::dataflow::parse_network;

const DOUBLER: &str = r#"{
  "pipes": [
    { "name": "src", "capacity": 8, "seed": [3, 1, 4, 1, 5] },
    { "name": "mid", "capacity": 8 },
    { "name": "sink", "capacity": 8 }
  ],
  "nodes": [
    { "name": "double", "kind": "times", "multiplier": 2,
      "in": ["src"], "out": ["mid"] },
    { "name": "watch", "kind": "probe",
      "in": ["mid"], "out": ["sink"] }
  ]
}"#;

fn main() {
    let mut net = parse_network(DOUBLER).expect("description is valid");
    net.run_round_robin(10);
    println!("doubled stream: {:?}", net.observations("watch").unwrap());

    // validation errors name the offender
    let broken = DOUBLER.replace(
        "\"mid\"], \"out\": [\"sink\"]",
        "\"nowhere\"], \"out\": [\"sink\"]",
    );
    let err = parse_network(&broken).unwrap_err();
    println!("broken description is rejected: {err}");
}
