use frobenius_core::oracles::sieve_frobenius;
use frobenius_core::reduce::{frobenius_general, frobenius_general_with, Outcome, PairOrder, StepKind};
use num_integer::Integer;
use proptest::prelude::*;

fn expected(values: &[i64]) -> Outcome<i64> {
    if values.iter().fold(0, |g, v| g.gcd(v)) != 1 {
        Outcome::NoSolution
    } else {
        Outcome::Value(sieve_frobenius(values).unwrap())
    }
}

#[test]
fn pairs_and_triples_up_to_forty() {
    for a in 1..=40i64 {
        for b in a..=40 {
            assert_eq!(frobenius_general(&[a, b]).unwrap().g, expected(&[a, b]), "{a} {b}");
            for c in b..=40 {
                let r = frobenius_general(&[c, a, b]).unwrap();
                assert_eq!(r.g, expected(&[a, b, c]), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn chain_records_every_johnson_division() {
    let r = frobenius_general(&[12i64, 18, 35]).unwrap();
    let ds: Vec<i64> = r
        .chain
        .iter()
        .filter_map(|s| match s.kind {
            StepKind::Johnson { d, .. } => Some(d),
            _ => None,
        })
        .collect();
    assert_eq!(ds.iter().product::<i64>(), 6);
    assert_eq!(r.g, Outcome::Value(sieve_frobenius(&[12, 18, 35]).unwrap()));
    for w in r.chain.windows(2) {
        assert_eq!(w[0].after, w[1].before);
    }
}

#[test]
fn shared_factor_has_no_answer() {
    let r = frobenius_general(&[6i64, 10, 14]).unwrap();
    assert_eq!(r.g, Outcome::NoSolution);
    assert_eq!(r.chain.last().unwrap().kind.name(), "NO_SOLUTION");
}

proptest! {
    #[test]
    fn order_and_pair_choice_do_not_matter(a in 1i64..200, b in 1i64..200, c in 1i64..200) {
        let first = frobenius_general_with(&[a, b, c], PairOrder::First).unwrap();
        let last = frobenius_general_with(&[c, b, a], PairOrder::Last).unwrap();
        prop_assert_eq!(&first.g, &last.g);
        prop_assert_eq!(first.g, expected(&[a, b, c]));
    }
}
