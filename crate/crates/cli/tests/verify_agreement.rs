//! The `verify` command is a thin shell over `apply_sequence`: it must accept
//! exactly the sequences the library accepts and report the same endpoint.

use std::fs;

use proptest::prelude::*;
use recolor_cli::files::{self, ColoringFile, SequenceFile, StepEntry};
use recolor_core::{apply_sequence, Coloring, Graph, RecoloringSequence, Step};

fn run(args: &[String]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = recolor_cli::run(args, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn graph() -> Graph {
    // A 5-cycle with a chord.
    Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verify_matches_apply_sequence(
        steps in prop::collection::vec((0usize..6, 0usize..5), 0..12),
    ) {
        let g = graph();
        let k = 4;
        let start = Coloring::new(k, vec![0, 1, 2, 0, 1]).unwrap();
        // Out-of-palette colors and out-of-range vertices are part of the input space.
        let seq: RecoloringSequence = steps.iter().map(|&(v, c)| Step::new(v, c)).collect();

        let dir = tempfile::tempdir().unwrap();
        let gp = dir.path().join("g.col");
        let cp = dir.path().join("c.json");
        let sp = dir.path().join("s.json");
        fs::write(&gp, recolor_cli::dimacs::serialize_graph(&g)).unwrap();
        fs::write(&cp, files::to_text(&ColoringFile::from(&start))).unwrap();
        let file = SequenceFile {
            steps: steps.iter().map(|&(v, color)| StepEntry { v, color }).collect(),
        };
        fs::write(&sp, files::to_text(&file)).unwrap();

        let args: Vec<String> = vec![
            "recolor".into(),
            "--json".into(),
            "verify".into(),
            "--graph".into(),
            gp.display().to_string(),
            "-k".into(),
            k.to_string(),
            "--from".into(),
            cp.display().to_string(),
            "--steps".into(),
            sp.display().to_string(),
        ];
        let (code, stdout) = run(&args);
        let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        match apply_sequence(&g, &start, &seq) {
            Ok(end) => {
                prop_assert_eq!(code, 0);
                let reported = files::parse_coloring(&report["final_coloring"].to_string()).unwrap();
                prop_assert_eq!(Coloring::try_from(reported).unwrap(), end);
            }
            Err(e) => {
                prop_assert_eq!(code, 1);
                prop_assert_eq!(report["error"].as_str().unwrap(), e.to_string());
            }
        }
    }
}
