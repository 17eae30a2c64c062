use lawcheck::{render, CellStat, Format, Report, Violation, MAX_WITNESSES};
use proptest::prelude::*;

fn report(law: &str, samples: usize, failures: usize, cells: &[(&str, usize, usize)]) -> Report {
    let mut r = Report::new(law);
    r.samples = samples;
    for i in 0..failures {
        r.fail(Violation::new("c", &[&i], i, i + 1));
    }
    for &(n, count, failures) in cells {
        r.cells.push(CellStat { name: n.to_string(), count, failures });
        if count == 0 {
            r.vacuous.push(n.to_string());
        }
    }
    r
}

#[test]
fn line_format() {
    let r = report("eq2.2", 10, 0, &[]);
    assert_eq!(r.line(), "LAW eq2.2 PASS samples=10 vacuous=-");
    let mut r = report("eq2.2", 10, 0, &[("a", 0, 0), ("b", 0, 0)]);
    r.fail(Violation::new("eq2.2", &[&1, &2], 3, 4));
    assert_eq!(r.line(), "LAW eq2.2 FAIL samples=10 vacuous=a,b\n  witness [eq2.2] inputs=1 ; 2 lhs=3 rhs=4");
}

#[test]
fn render_formats() {
    let rs = [report("x", 3, 0, &[]), report("t", 5, 1, &[("p", 5, 1), ("q", 0, 0)])];
    assert_eq!(
        render(&rs, Format::Tsv),
        "law\tcell\tcount\tfailures\tstatus\nx\t-\t3\t0\tPASS\nt\tp\t5\t1\tFAIL\nt\tq\t0\t0\tVACUOUS\n"
    );
    let text = render(&rs, Format::Text);
    assert!(text.starts_with("LAW x PASS samples=3 vacuous=-\nLAW t FAIL samples=5 vacuous=q\n  witness [c]"));
    assert_eq!("tsv".parse::<Format>(), Ok(Format::Tsv));
    assert_eq!("text".parse::<Format>(), Ok(Format::Text));
    assert!("json".parse::<Format>().is_err());
}

#[test]
fn merge_fills_vacuous_cells() {
    let a = report("t", 0, 0, &[("p", 0, 0)]);
    let b = report("t", 4, 0, &[("p", 4, 0)]);
    let m = a.merge(b);
    assert!(m.vacuous.is_empty());
    assert_eq!(m.cell("p").unwrap().count, 4);
}

proptest! {
    #[test]
    fn merge_adds_counts_and_caps_witnesses(s1 in 0usize..50, f1 in 0usize..12, s2 in 0usize..50, f2 in 0usize..12) {
        let m = report("l", s1, f1, &[("c", s1, f1)]).merge(report("l", s2, f2, &[("c", s2, f2)]));
        prop_assert_eq!(m.samples, s1 + s2);
        prop_assert_eq!(m.failures, f1 + f2);
        prop_assert_eq!(m.violations.len(), (f1 + f2).min(MAX_WITNESSES));
        prop_assert_eq!(m.cell("c").unwrap().count, s1 + s2);
        prop_assert_eq!(m.passed(), f1 + f2 == 0);
        prop_assert_eq!(m.vacuous.is_empty(), s1 + s2 > 0);
    }

    #[test]
    fn merge_with_empty_is_identity(s in 0usize..50, f in 0usize..12) {
        let r = report("l", s, f, &[("c", s, f)]);
        prop_assert_eq!(r.clone().merge(Report::new("l")), r);
    }

    #[test]
    fn status_word_tracks_failures(s in 1usize..50, f in 0usize..5) {
        let r = report("l", s, f, &[]);
        let word = if f == 0 { "PASS" } else { "FAIL" };
        let head = format!("LAW l {} samples={}", word, s);
        prop_assert!(r.line().starts_with(&head));
        prop_assert!(r.tsv().ends_with(word));
    }
}
