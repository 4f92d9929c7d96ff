use hopf_fiber::corpus::{qm2_presentation, qsl2_presentation, usl2_presentation};
use hopf_fiber::rewrite::{extract_bialgebra, Presentation, RewriteError};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn shipped_presentation_files_match_the_builders() {
    for (file, pres) in [
        ("qsl2_l3_p7.pres", qsl2_presentation(3, 7).unwrap().0),
        ("usl2_l3_p7.pres", usl2_presentation(3, 7).unwrap().0),
        ("qm2_t3_p7.pres", qm2_presentation(3, 7).unwrap().0),
    ] {
        let text = fixture(file);
        assert_eq!(pres.to_text(), text, "{file}");
        let parsed = Presentation::parse(&text).unwrap();
        assert_eq!(parsed, pres, "{file}");
        assert_eq!(parsed.to_text(), text, "{file}");
    }
}

#[test]
fn basis_sizes() {
    for (ell, p) in [(3, 7), (5, 11), (3, 13)] {
        assert_eq!(qsl2_presentation(ell, p).unwrap().0.enumerate_basis().unwrap().len() as u64, ell.pow(3));
        assert_eq!(usl2_presentation(ell, p).unwrap().0.enumerate_basis().unwrap().len() as u64, ell.pow(3));
    }
    for (t, p) in [(3, 7), (5, 11)] {
        assert_eq!(qm2_presentation(t, p).unwrap().0.enumerate_basis().unwrap().len() as u64, t.pow(4));
    }
}

#[test]
fn shipped_presentations_are_confluent() {
    for (pres, pairs) in [
        (qsl2_presentation(3, 7).unwrap().0, 13),
        (usl2_presentation(3, 7).unwrap().0, 13),
        (qm2_presentation(3, 7).unwrap().0, 24),
    ] {
        let report = pres.complete_check().unwrap();
        assert!(report.is_confluent());
        assert_eq!(report.pairs_checked, pairs);
    }
}

#[test]
fn quantum_plane_fixture() {
    let pres = Presentation::parse(&fixture("quantum_plane.pres")).unwrap();
    assert!(pres.complete_check().unwrap().is_confluent());
    let basis: Vec<String> = pres.enumerate_basis().unwrap().iter().map(|w| pres.format_word(w)).collect();
    assert_eq!(basis.len(), 9);
    assert!(basis.contains(&"x*x*y*y".to_string()));
    // comments are not preserved, everything else is
    assert_eq!(Presentation::parse(&pres.to_text()).unwrap(), pres);
    // y*x*y*x = q³ x*x*y*y and q³ = 1
    let yxyx = pres.normalize(&pres.parse_poly("y*x*y*x").unwrap()).unwrap();
    assert_eq!(pres.format_poly(&yxyx), "x*x*y*y");
    let yyx = pres.normalize(&pres.parse_poly("y*y*x").unwrap()).unwrap();
    assert_eq!(pres.format_poly(&yyx), "4 x*y*y");
}

#[test]
fn inconsistent_fixture_has_one_unresolved_overlap() {
    let pres = Presentation::parse(&fixture("inconsistent.pres")).unwrap();
    let report = pres.complete_check().unwrap();
    assert_eq!(report.unresolved.len(), 1);
    let pair = &report.unresolved[0];
    assert_eq!(pres.format_word(&pair.word), "c*b*a");
    assert_ne!(pair.first, pair.second);
}

#[test]
fn extraction_needs_a_finite_basis() {
    let text = "field 5\ngenerators x y\nbound 10\ny*x -> x*y\n";
    let pres = Presentation::parse(text).unwrap();
    assert!(matches!(pres.enumerate_basis(), Err(RewriteError::InfiniteBasis { .. }) | Err(RewriteError::BoundExceeded { .. })));
    let (qsl2, data) = qsl2_presentation(3, 7).unwrap();
    let extracted = extract_bialgebra(&qsl2, &data).unwrap();
    assert_eq!(extracted.basis.len(), 27);
    assert!(extracted.bialgebra.verify_structure().all_passed());
}
