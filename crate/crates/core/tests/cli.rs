use triples_hodge::cli::dispatch;
use triples_hodge::rank2_bundles::kirwan_genus2;
use triples_hodge::triples22::small_sigma_22;
use triples_hodge::triples_low_rank::TripleType;
use triples_hodge::BiLaurent;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("triples-hodge").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn polystable_genus_two_text() {
    let (code, out, _) = run(&["compute", "--space", "m2-even-polystable", "--g", "2", "--d", "0", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), kirwan_genus2().to_string());
}

#[test]
fn both_even_small_parameter_is_rejected() {
    let (code, out, err) = run(&["compute", "--space", "t22-small", "--g", "2", "--d1", "6", "--d2", "2"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("both even"), "{err}");
}

#[test]
fn json_round_trips() {
    let (code, out, _) = run(&["compute", "--space", "t22-small", "--g", "2", "--d1", "6", "--d2", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let poly: BiLaurent = serde_json::from_value(v["hodge"].clone()).unwrap();
    assert_eq!(poly, small_sigma_22(&TripleType::rank22(2, 6, 1)).unwrap().poly);
    assert_eq!(v["dim"], 15);
}

#[test]
fn poincare_is_ascending_in_t() {
    let (code, out, _) = run(&["compute", "--space", "m2-odd", "--g", "2", "--d", "1", "--poincare"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 + 4t + "), "{out}");
}

#[test]
fn sigma_aliases_and_sides() {
    let base = ["compute", "--space", "t22-at", "--g", "2", "--d1", "6", "--d2", "1", "--sigma"];
    let at = |s: &str| {
        let mut args = base.to_vec();
        args.push(s);
        run(&args)
    };
    let small = run(&["compute", "--space", "t22-small", "--g", "2", "--d1", "6", "--d2", "1"]).1;
    let large = run(&["compute", "--space", "t22-large", "--g", "2", "--d1", "6", "--d2", "1"]).1;
    assert_eq!(at("sm+").1, small);
    assert_eq!(at("sM+").1, large);
    assert_eq!(at("7/2-").1, small);
    assert_ne!(at("7/2+").1, small);
    assert_eq!(at("7/2").0, 1);
}

#[test]
fn low_rank_spaces() {
    let (code, out, _) = run(&["compute", "--space", "t21", "--g", "2", "--d1", "5", "--d2", "0", "--sigma", "sm+"]);
    assert_eq!(code, 0);
    let (code12, out12, _) = run(&["compute", "--space", "t12", "--g", "2", "--d1", "0", "--d2", "-5", "--sigma", "sm+"]);
    assert_eq!(code12, 0);
    assert_eq!(out, out12);
}

#[test]
fn critical_and_flips() {
    let (code, out, _) = run(&["critical", "--rank", "2,2", "--g", "2", "--d1", "6", "--d2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().next().unwrap().contains("sigma_c=7/2"));
    let (code, out, _) = run(&["critical", "--rank", "2,1", "--g", "2", "--d1", "5", "--d2", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n7\n10\n");

    let (code, out, _) = run(&["flips", "--g", "2", "--d1", "6", "--d2", "1", "--wall", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n=2 sigma_c=9/2 dL-wall d_L=4: "));
    let (code, _, _) = run(&["flips", "--g", "2", "--d1", "6", "--d2", "2", "--wall", "2"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["flips", "--g", "2", "--d1", "6", "--d2", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("flips not implemented"));
}

#[test]
fn fast_suite_passes() {
    let (code, out, err) = run(&["verify", "--suite", "fast", "--g-range", "2..2"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().all(|l| l.contains("\"status\":\"pass\"")));
    assert!(err.contains("total"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 1);
    assert_eq!(run(&["compute", "--space", "m2-odd", "--g", "2", "--d", "2"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("compute"));
}
