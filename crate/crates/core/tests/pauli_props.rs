use idbench_core::pauli::{Letter, PauliString};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

fn pauli(max_n: usize) -> impl Strategy<Value = PauliString> {
    (1..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(0usize..4, n), 0u8..4).prop_map(|(ls, k)| {
            let letters: Vec<Letter> = ls.into_iter().map(|i| Letter::ALL[i]).collect();
            PauliString::from_letters(&letters).unwrap().with_phase(k)
        })
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (PauliString, PauliString)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = (prop::collection::vec(0usize..4, n), 0u8..4).prop_map(|(ls, k)| {
            let letters: Vec<Letter> = ls.into_iter().map(|i| Letter::ALL[i]).collect();
            PauliString::from_letters(&letters).unwrap().with_phase(k)
        });
        (one.clone(), one)
    })
}

fn triple(max_n: usize) -> impl Strategy<Value = (PauliString, PauliString, PauliString)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = prop::collection::vec(0usize..4, n).prop_map(|ls| {
            let letters: Vec<Letter> = ls.into_iter().map(|i| Letter::ALL[i]).collect();
            PauliString::from_letters(&letters).unwrap()
        });
        (one.clone(), one.clone(), one)
    })
}

/// Dense matrix built independently: Kronecker product of the 2×2 letter
/// matrices, qubit 0 leftmost, times i^phase.
fn dense(p: &PauliString) -> DMatrix<Complex64> {
    let mut m = DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    for l in p.letters() {
        let a = l.matrix();
        let s = DMatrix::from_fn(2, 2, |r, c| a[r][c]);
        m = m.kronecker(&s);
    }
    let phase = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ][p.phase_exp() as usize];
    m * phase
}

fn close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> bool {
    (a - b).iter().all(|z| z.norm() < 1e-12)
}

proptest! {
    #[test]
    fn product_matches_dense((a, b) in pair(4)) {
        let c = a.multiply(&b).unwrap();
        prop_assert!(close(&dense(&c), &(dense(&a) * dense(&b))));
        prop_assert!(close(&c.to_matrix().unwrap(), &dense(&c)));
    }

    #[test]
    fn commutation_matches_dense((a, b) in pair(4)) {
        let (ma, mb) = (dense(&a), dense(&b));
        let dense_commute = close(&(&ma * &mb), &(&mb * &ma));
        prop_assert_eq!(a.commutes(&b).unwrap(), dense_commute);
        prop_assert_eq!(a.anticommuting_sites(&b).unwrap().iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 0, dense_commute);
    }

    #[test]
    fn multiplication_is_associative((a, b, c) in triple(6)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn squares_to_identity_up_to_phase(p in pauli(6)) {
        let sq = p.multiply(&p).unwrap();
        prop_assert!(sq.is_identity_letters());
        // (i^k P)^2 = i^{2k}
        prop_assert_eq!(sq.phase_exp(), (2 * p.phase_exp()) % 4);
    }

    #[test]
    fn text_round_trip(p in pauli(8)) {
        let back: PauliString = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reversal_is_an_involution(p in pauli(8)) {
        prop_assert_eq!(p.reversed().reversed(), p.clone());
        prop_assert_eq!(p.reversed().weight(), p.weight());
    }
}

#[test]
fn mismatched_lengths_are_rejected() {
    let a: PauliString = "XX".parse().unwrap();
    let b: PauliString = "XXX".parse().unwrap();
    assert!(a.multiply(&b).is_err());
    assert!(a.commutes(&b).is_err());
}

#[test]
fn bad_text_is_rejected() {
    for s in ["", "XQ", "++X", "-i"] {
        assert!(s.parse::<PauliString>().is_err(), "{s:?}");
    }
}
