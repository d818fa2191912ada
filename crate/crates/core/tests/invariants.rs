use twistfib_core::{
    build_catalog, check_involutions_and_order, check_pi1_derivations, compute_invariant_report, phi_relator,
    theta_word, word_matrix, Family,
};

// Plain i64 transvection products, independent of the BigInt code path.
fn oracle_matrix(classes: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = classes[0].len();
    let g = n / 2;
    let mut m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    for c in classes {
        // T x = x + <x, c> c, <x, c> = Σ x_a c_b − x_b c_a
        let mut next = m.clone();
        for col in 0..n {
            let x: Vec<i64> = (0..n).map(|r| m[r][col]).collect();
            let pair: i64 = (0..g).map(|i| x[i] * c[g + i] - x[g + i] * c[i]).sum();
            for r in 0..n {
                next[r][col] = x[r] + pair * c[r];
            }
        }
        m = next;
    }
    m
}

fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
}

#[test]
fn relator_is_identity_by_oracle() {
    for p in [3, 5, 7, 9, 11, 13] {
        let cat = build_catalog(p).unwrap();
        let classes: Vec<Vec<i64>> =
            cat.resolve(&phi_relator(p).unwrap()).unwrap().into_iter().map(|c| c.coeffs().to_vec()).collect();
        assert!(is_identity(&oracle_matrix(&classes)), "p={p}");
        assert!(word_matrix(&phi_relator(p).unwrap(), &cat).unwrap().is_identity());
    }
}

#[test]
fn theta_squares_by_oracle() {
    for p in [3, 5, 7, 9, 11, 13] {
        let cat = build_catalog(p).unwrap();
        for f in [Family::Theta1, Family::Theta2] {
            let t = theta_word(p, f).unwrap();
            let classes: Vec<Vec<i64>> =
                cat.resolve(&t.repeat(2)).unwrap().into_iter().map(|c| c.coeffs().to_vec()).collect();
            assert!(is_identity(&oracle_matrix(&classes)));
        }
        let inv = check_involutions_and_order(&cat).unwrap();
        assert!(inv.passed());
        assert_eq!(inv.phi_order, Some(p as u32));
    }
}

#[test]
fn closed_forms_for_small_p() {
    for p in [3i64, 5, 7, 9] {
        let r = compute_invariant_report(p).unwrap();
        assert_eq!(r.euler_characteristic, 2 * p * (p + 7));
        assert_eq!(r.signature, -12 * p);
        assert_eq!(r.c1_squared, 4 * p * (p - 2));
        assert_eq!(r.chi_h, p * (p + 1) / 2);
        assert_eq!(r.cycle_count as i64, 2 * p * (p + 9));
        assert!(r.all_checks_pass());
    }
}

#[test]
fn pi1_chain_for_general_p() {
    for p in [3, 5, 7, 9, 11] {
        let r = check_pi1_derivations(&build_catalog(p).unwrap()).unwrap();
        assert!(r.ok(), "p={p}");
        assert_eq!(r.alpha_chain.links.len() as i64, p - 2);
    }
}
