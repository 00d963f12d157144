//! Cross-route and representation-side invariants of the ghost-centre
//! machinery: the pair projection agrees with the group projection on the
//! diagonal pair, Harish-Chandra images of twisted invariants are divisible
//! by `t_g` and shifted-Weyl invariant, ghost elements act by graded
//! constants with the expected twist direction, and products of ghost
//! elements commute.

use ghostcentre_core::aut::GradedAutomorphism;
use ghostcentre_core::borel::{check_root_pairings, dot, make_borel};
use ghostcentre_core::families::{build_algebra, build_algebra_with_rep, build_q1};
use ghostcentre_core::ghost::{
    a_phi_element, center_of_even_part, certify_a_phi, product_into_twisted, v_g_closed_form,
};
use ghostcentre_core::hc::{
    check_degree_bound_group, check_degree_bound_pair, clifford_poly_bh, diagonal_pair,
    embed_element, hc_project_group, hc_project_pair, pair_poly_to_group,
    rho_shifted_weyl_check, t_g_polynomial,
};
use ghostcentre_core::linalg::Mat;
use ghostcentre_core::module::{
    act, build_kac_module, graded_constant_check, GradedConstants,
};
use ghostcentre_core::pbw::PbwEngine;
use ghostcentre_core::prng::SplitMix64;
use ghostcentre_core::scalar::{rat_int, FieldKind, FieldScalar, Rat};
use num_traits::Zero;

fn random_word(rng: &mut SplitMix64, dim: usize, max_len: usize) -> Vec<u16> {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len).map(|_| rng.below(dim as u64) as u16).collect()
}

#[test]
fn route_equality_pair_vs_group() {
    for desc in ["gl(1|1)", "gl(2|1)"] {
        let g = build_algebra(desc).unwrap();
        let borel = make_borel(&g, None).unwrap();
        let hc_eng = PbwEngine::new(&g, borel.hc_ordering(&g));
        let dp = diagonal_pair(&g, &borel).unwrap();
        let host_eng = PbwEngine::new(&dp.host, dp.pair.ordering());
        let mut rng = SplitMix64::new(0xBEEF_0001);
        for _ in 0..12 {
            let w = random_word(&mut rng, g.dim(), 4);
            let e = hc_eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
            let group_side = hc_project_group(&g, &hc_eng, &e).unwrap();
            let host_elem = embed_element(&host_eng, &dp.left_embed, &e, &hc_eng.ord).unwrap();
            let pair_side = hc_project_pair(&dp.host, &dp.pair, &host_eng, &host_elem).unwrap();
            let translated = pair_poly_to_group(&pair_side, &g).unwrap();
            assert_eq!(group_side, translated, "{desc}: word {w:?}");
        }
    }
}

#[test]
fn hc_is_multiplicative_over_central_elements() {
    let g = build_algebra("gl(1|1)").unwrap();
    let borel = make_borel(&g, None).unwrap();
    let eng = PbwEngine::new(&g, borel.hc_ordering(&g));
    let h1 = g.index_of("h1").unwrap();
    let h2 = g.index_of("h2").unwrap();
    let z = eng
        .gen(h1, FieldKind::Rational)
        .add(&eng.gen(h2, FieldKind::Rational))
        .unwrap(); // central
    let mut rng = SplitMix64::new(0xBEEF_0002);
    for _ in 0..20 {
        let w = random_word(&mut rng, g.dim(), 4);
        let gamma = eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
        let lhs = hc_project_group(&g, &eng, &eng.multiply(&gamma, &z).unwrap()).unwrap();
        let rhs = hc_project_group(&g, &eng, &gamma)
            .unwrap()
            .mul(&hc_project_group(&g, &eng, &z).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn degree_bound_randomized() {
    for desc in ["gl(1|1)", "gl(2|1)", "osp(1|2)"] {
        let g = build_algebra(desc).unwrap();
        let borel = make_borel(&g, None).unwrap();
        let eng = PbwEngine::new(&g, borel.hc_ordering(&g));
        let mut rng = SplitMix64::new(0xBEEF_0003);
        for _ in 0..60 {
            let w = random_word(&mut rng, g.dim(), 6);
            let e = eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
            if e.filtration_degree(&g) > 8 {
                continue;
            }
            assert!(check_degree_bound_group(&g, &eng, &e).unwrap(), "{desc}");
        }
    }
    // pair version for q(1)
    let (q, _) = build_q1().unwrap();
    let borel = make_borel(&q, None).unwrap();
    let dp = diagonal_pair(&q, &borel).unwrap();
    let host_eng = PbwEngine::new(&dp.host, dp.pair.ordering());
    let mut rng = SplitMix64::new(0xBEEF_0004);
    for _ in 0..40 {
        let w = random_word(&mut rng, dp.host.dim(), 5);
        let e = host_eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
        assert!(check_degree_bound_pair(&dp.host, &dp.pair, &host_eng, &e).unwrap());
    }
}

#[test]
fn ghost_images_divisible_and_invariant() {
    for desc in ["gl(1|1)", "gl(2|1)"] {
        let g = build_algebra(desc).unwrap();
        let borel = make_borel(&g, None).unwrap();
        let eng = PbwEngine::coset(&g);
        let hc_eng = PbwEngine::new(&g, borel.hc_ordering(&g));
        let tg = t_g_polynomial(&g, &borel).unwrap();
        let centre = center_of_even_part(&g, &eng, 2).unwrap();
        let delta = GradedAutomorphism::delta();
        for z in &centre {
            let a = a_phi_element(&g, &eng, &delta, z).unwrap();
            let hc = hc_project_group(&g, &hc_eng, &a.element).unwrap();
            assert!(hc.divide_exact_general(&tg).is_some(), "{desc}: divisibility");
            assert!(rho_shifted_weyl_check(&hc, &g, &borel).unwrap(), "{desc}: invariance");
            // filtration bound: deg <= 2 deg HC(z) + dim g_odd
            let dz = z.filtration_degree(&g);
            assert!(
                a.element.filtration_degree(&g) <= dz + g.odd_indices().len() as u64,
                "{desc}: filtration bound"
            );
        }
    }
}

#[test]
fn a_phi_is_injective_on_the_centre_basis() {
    let g = build_algebra("gl(2|1)").unwrap();
    let eng = PbwEngine::coset(&g);
    let centre = center_of_even_part(&g, &eng, 2).unwrap();
    let delta = GradedAutomorphism::delta();
    let images: Vec<_> = centre
        .iter()
        .map(|z| a_phi_element(&g, &eng, &delta, z).unwrap().element)
        .collect();
    // linear independence over the PBW monomials
    let mut monos = std::collections::BTreeMap::new();
    for e in &images {
        for m in e.terms.keys() {
            let next = monos.len();
            monos.entry(m.clone()).or_insert(next);
        }
    }
    let mut mat = Mat::zero(monos.len(), images.len(), FieldKind::Rational);
    for (c, e) in images.iter().enumerate() {
        for (m, v) in &e.terms {
            *mat.at_mut(monos[m], c) = v.clone();
        }
    }
    assert_eq!(mat.rank(), images.len());
}

#[test]
fn ghost_products_commute_pairwise() {
    for desc in ["gl(1|1)", "gl(2|1)"] {
        let g = build_algebra(desc).unwrap();
        let eng = PbwEngine::coset(&g);
        let centre = center_of_even_part(&g, &eng, 1).unwrap();
        let delta = GradedAutomorphism::delta();
        let two = GradedAutomorphism::Scale(FieldScalar::Rat(rat_int(2)));
        let mut ghosts = Vec::new();
        for z in centre.iter().take(3) {
            ghosts.push(a_phi_element(&g, &eng, &delta, z).unwrap());
            ghosts.push(a_phi_element(&g, &eng, &two, z).unwrap());
        }
        for a in &ghosts {
            for b in &ghosts {
                let ab = eng.multiply(&a.element, &b.element).unwrap();
                let ba = eng.multiply(&b.element, &a.element).unwrap();
                assert_eq!(ab, ba, "{desc}: full ghost centre is commutative");
                // and the product is certified in the composed twist
                let p = product_into_twisted(&eng, a, b).unwrap();
                assert!(p.certified);
            }
        }
    }
}

#[test]
fn graded_constants_and_twist_direction() {
    // A_{scale(s)} elements act on Kac(lambda) by s^{-j} p(lambda) on
    // degree -j; delta gives alternating signs.
    let g = build_algebra("gl(1|1)").unwrap();
    let borel = make_borel(&g, None).unwrap();
    let eng = PbwEngine::coset(&g);
    let hc_eng = PbwEngine::new(&g, borel.hc_ordering(&g));
    let kac_eng = PbwEngine::new(&g, ghostcentre_core::module::kac_ordering(&g));
    let s = FieldScalar::Rat(rat_int(2));
    let phi = GradedAutomorphism::Scale(s.clone());
    let one = eng.one(FieldKind::Rational);
    let a = a_phi_element(&g, &eng, &phi, &one).unwrap();
    let p = hc_project_group(&g, &hc_eng, &a.element).unwrap();
    let lam = [rat_int(2), rat_int(1)];
    let m = build_kac_module(&g, &borel, &lam).unwrap();
    assert!(m.typical);
    match graded_constant_check(&kac_eng, &a.element, &m).unwrap() {
        GradedConstants::Scalars(sc) => {
            let p_lam = p.eval_even_rat(&lam).unwrap();
            assert_eq!(sc[0], p_lam);
            assert_eq!(sc[1], p_lam.div(&s).unwrap());
        }
        GradedConstants::Failure { .. } => panic!("ghost element must act by graded constants"),
    }
    // symbolic scalars: over Q(c) the ratio between degrees is c^{-1}
    let onec = eng.one(FieldKind::RatFun);
    let phic = GradedAutomorphism::Scale(FieldScalar::fun_c());
    let ac = a_phi_element(&g, &eng, &phic, &onec).unwrap();
    match graded_constant_check(&kac_eng, &ac.element, &m).unwrap() {
        GradedConstants::Scalars(sc) => {
            let ratio = sc[1].div(&sc[0]).unwrap();
            assert_eq!(ratio, FieldScalar::fun_c().inv().unwrap());
        }
        GradedConstants::Failure { .. } => panic!("symbolic ghost element must be graded-constant"),
    }
}

#[test]
fn central_elements_match_highest_weight_evaluation() {
    let g = build_algebra("gl(2|1)").unwrap();
    let borel = make_borel(&g, None).unwrap();
    let eng = PbwEngine::coset(&g);
    let hc_eng = PbwEngine::new(&g, borel.hc_ordering(&g));
    let kac_eng = PbwEngine::new(&g, ghostcentre_core::module::kac_ordering(&g));
    let centre = center_of_even_part(&g, &eng, 2).unwrap();
    // pick a central element of U(g) built from the ghost machinery:
    // the square of the minimal ghost is central
    let delta = GradedAutomorphism::delta();
    let t = a_phi_element(&g, &eng, &delta, &eng.one(FieldKind::Rational)).unwrap();
    let z = eng.multiply(&t.element, &t.element).unwrap();
    certify_a_phi(&eng, &GradedAutomorphism::identity(), &z).unwrap();
    let p = hc_project_group(&g, &hc_eng, &z).unwrap();
    let lam = [rat_int(3), rat_int(0), rat_int(1)];
    let m = build_kac_module(&g, &borel, &lam).unwrap();
    match graded_constant_check(&kac_eng, &z, &m).unwrap() {
        GradedConstants::Scalars(sc) => {
            let expected = p.eval_even_rat(&lam).unwrap();
            for s in sc {
                assert_eq!(s, expected);
            }
        }
        GradedConstants::Failure { .. } => panic!("central element must act by one scalar"),
    }
    let _ = centre;
}

#[test]
fn clifford_form_nondegeneracy_matches_rank_oracle() {
    let (q, _) = build_q1().unwrap();
    let bh = clifford_poly_bh(&q).unwrap();
    let mut rng = SplitMix64::new(0xBEEF_0005);
    for _ in 0..25 {
        let lam = [rat_int(rng.int_in(6))];
        // rank of the 1x1 form matrix lambda([b,b]) = 2 lambda(h)
        let b = q.index_of("b").unwrap();
        let form_val: Rat = q
            .bracket_basis(b, b)
            .iter()
            .map(|(k, c)| {
                let t = q.cartan_even.iter().position(|&ce| ce == *k).unwrap();
                c * &lam[t]
            })
            .sum();
        let nondeg = !form_val.is_zero();
        let bh_val = bh.eval_even_rat(&lam).unwrap();
        assert_eq!(nondeg, !bh_val.is_zero());
    }
}

#[test]
fn root_pairings_nondegenerate_for_builtins() {
    for desc in ["gl(1|1)", "gl(2|1)", "sl(2|1)", "osp(1|2)", "osp(1|4)", "osp(2|2)"] {
        let g = build_algebra(desc).unwrap();
        let borel = make_borel(&g, None).unwrap();
        check_root_pairings(&g, &borel).unwrap();
    }
}

#[test]
fn rho_is_functional_independent() {
    // two equivalent positivity functionals give the same rho
    let g = build_algebra("gl(2|1)").unwrap();
    let b1 = make_borel(&g, None).unwrap();
    let f2 = [rat_int(30), rat_int(20), rat_int(10)];
    let b2 = make_borel(&g, Some(&f2)).unwrap();
    assert_eq!(b1.rho, b2.rho);
    assert_eq!(b1.n_plus, b2.n_plus);
    let _ = dot(&b1.rho, &f2);
}

#[test]
fn automorphisms_preserve_brackets_for_builtins() {
    for desc in ["gl(1|1)", "gl(2|1)", "osp(1|2)", "osp(2|2)", "q(1)"] {
        let (g, _) = build_algebra_with_rep(desc).unwrap();
        assert!(GradedAutomorphism::identity().preserves_brackets(&g).unwrap());
        assert!(GradedAutomorphism::delta().preserves_brackets(&g).unwrap());
        if g.is_type_i() {
            let phi = GradedAutomorphism::Scale(FieldScalar::fun_c());
            assert!(phi.preserves_brackets(&g).unwrap(), "{desc}");
        }
    }
}

#[test]
fn ghost_defining_property_via_act() {
    // v_g's coset class pairs to zero with every generator, seen through
    // a faithful module for gl(1|1): T_g = ad_delta(v_g)(1) supercommutes
    // with the whole algebra up to the delta twist.
    let g = build_algebra("gl(1|1)").unwrap();
    let borel = make_borel(&g, None).unwrap();
    let eng = PbwEngine::coset(&g);
    let ghost = v_g_closed_form(&g, &eng).unwrap();
    let kac_eng = PbwEngine::new(&g, ghostcentre_core::module::kac_ordering(&g));
    let m = build_kac_module(&g, &borel, &[rat_int(1), rat_int(0)]).unwrap();
    let delta = GradedAutomorphism::delta();
    let t = eng
        .twisted_adjoint_element(&delta, &ghost.element, &eng.one(FieldKind::Rational))
        .unwrap();
    // acting on the typical module: invertible diagonal with +-2(l1+l2)
    let mat = act(&kac_eng, &t, &m).unwrap();
    assert_eq!(mat[0], vec![(0, FieldScalar::Rat(rat_int(-2)))]);
    assert_eq!(mat[1], vec![(1, FieldScalar::Rat(rat_int(2)))]);
}
