use std::fs;

use polyprod::chordal::ChordlessCycle;
use polyprod::cli::run;
use polyprod::homology::VerificationOutcome;
use polyprod::io::read_complex;
use polyprod::report::Payload;
use polyprod::SimplicialComplex;

fn payload(args: &[&str]) -> (i32, Payload, String) {
    let mut argv = vec!["polyprod"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (out.exit_code, out.report.expect("report").result, out.output)
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("polyprod-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn three_points_decomposition_table() {
    let (code, p, text) = payload(&["decompose", "corpus/three_points.scx", "--pairs", "moment-angle"]);
    assert_eq!(code, 0);
    assert!(text.contains("by sphere: S^3 x3, S^4 x2"), "{text}");
    let Payload::Decompose { decomposition, polynomial } = p else { panic!() };
    assert_eq!(decomposition.sphere_dims().unwrap(), vec![3, 3, 3, 4, 4]);
    assert_eq!(polynomial.unwrap().coefficients(), &[1, 0, 0, 3, 2]);
}

#[test]
fn pentagon_verify_reports_cycle_and_witness() {
    let (code, p, text) = payload(&["verify", "corpus/pentagon.scx"]);
    assert_eq!(code, 1);
    assert!(text.contains("chordless cycle: (1,2,3,4,5)"), "{text}");
    assert!(text.contains("b7=1"), "{text}");
    let Payload::Verify(v) = p else { panic!() };
    let VerificationOutcome::NotCoH { cycle, zk_degree, .. } = v.outcome else { panic!() };
    assert_eq!(cycle, ChordlessCycle { cycle: vec![1, 2, 3, 4, 5] });
    assert_eq!(zk_degree, 7);
    assert_eq!(v.betti.get(7), 1);
}

#[test]
fn flagify_boundary_tetra_writes_simplex() {
    let out = std::env::temp_dir().join(format!("polyprod-flag-{}.scx", std::process::id()));
    let out_s = out.display().to_string();
    let (code, p, _) = payload(&["flagify", "corpus/boundary_tetra.scx", "--out", &out_s]);
    assert_eq!(code, 0);
    let Payload::Flagify { added_faces, written_to, .. } = p else { panic!() };
    assert_eq!(added_faces, vec![vec![1, 2, 3, 4]]);
    assert_eq!(written_to.as_deref(), Some(out_s.as_str()));
    assert_eq!(read_complex(&out, 24).unwrap(), SimplicialComplex::simplex(4).unwrap());
    fs::remove_file(out).unwrap();
}

#[test]
fn rejections_exit_one_with_certificate() {
    let (code, p, _) = payload(&["decompose", "corpus/boundary_tetra.scx", "--pairs", "symbolic"]);
    assert_eq!(code, 1);
    assert!(matches!(p, Payload::Rejected { certificate: Some(c), .. } if c == vec![1, 2, 3, 4]));

    let (code, p, _) = payload(&["decompose", "corpus/octahedron.scx", "--pairs", "moment-angle"]);
    assert_eq!(code, 1);
    let Payload::Rejected { certificate: Some(c), .. } = p else { panic!() };
    assert_eq!(c.len(), 4);

    let (code, _, _) = payload(&["loopspace", "corpus/cycle_5.scx", "--max-dim", "6"]);
    assert_eq!(code, 1);
    let (code, _, _) = payload(&["betti", "corpus/ghost_path.scx"]);
    assert_eq!(code, 1);
}

#[test]
fn parse_errors_exit_two_and_name_the_line() {
    let bad = scratch("bad.scx", "vertices 3\nfacet 1 2\nfacet 2 9\n");
    let (code, p, text) = payload(&["info", &bad]);
    assert_eq!(code, 2);
    assert!(matches!(p, Payload::Error { .. }));
    assert!(text.contains("line 3") && text.contains('9'), "{text}");

    let (code, _, _) = payload(&["info", "corpus/does-not-exist.scx"]);
    assert_eq!(code, 2);
    let (code, _, _) = payload(&["decompose", "corpus/path_3.scx", "--pairs", "spheres", "2,x,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = payload(&["decompose", "corpus/path_3.scx", "--pairs", "spheres", "2,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = payload(&["decompose", "corpus/path_3.scx", "--pairs", "tori"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run(["polyprod", "frobnicate"]).exit_code, 2);
    assert_eq!(run(["polyprod", "decompose", "corpus/path_3.scx"]).exit_code, 2);
    let help = run(["polyprod", "--help"]);
    assert_eq!(help.exit_code, 0);
    assert!(help.output.contains("hilton-milnor"));
}

#[test]
fn vertex_guards() {
    // the oracle commands default to ten vertices
    let eleven = scratch("eleven.scx", "vertices 11\nfacet 1 2\n");
    assert_eq!(run(["polyprod", "info", &eleven]).exit_code, 0);
    assert_eq!(run(["polyprod", "betti", &eleven]).exit_code, 2);
    assert_eq!(run(["polyprod", "betti", &eleven, "--max-vertices", "12"]).exit_code, 1);
    assert_eq!(run(["polyprod", "--max-vertices", "4", "info", "corpus/points_5.scx"]).exit_code, 2);
}

#[test]
fn sphere_pairs_and_json_flag() {
    let (code, p, _) = payload(&["decompose", "corpus/path_3.scx", "--pairs", "spheres", "2,5,4", "--json"]);
    assert_eq!(code, 0);
    let Payload::Decompose { decomposition, .. } = p else { panic!() };
    // Σ S^1 ∧ S^3 = S^5
    assert_eq!(decomposition.sphere_dims().unwrap(), vec![5]);

    let out = run(["polyprod", "--json", "hilton-milnor", "--spheres", "2,2", "--max-dim", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["result"]["kind"], "hilton-milnor");
    assert_eq!(v["result"]["data"]["series_check"]["holds"], true);
}

#[test]
fn split_hopf_option() {
    let (code, p, _) = payload(&["loopspace", "corpus/path_5.scx", "--max-dim", "9", "--split-hopf"]);
    assert_eq!(code, 0);
    let Payload::LoopSpace(l) = p else { panic!() };
    assert!(l.split_hopf && l.series_consistent);
    assert_eq!(l.torus_rank, 5);
}
