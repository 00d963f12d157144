//! Engine-level invariants: PBW soundness against the defining
//! supermatrix representation, reordering round trips, the module axiom
//! of the twisted adjoint action, and exact ring laws on random elements.

use ghostcentre_core::aut::GradedAutomorphism;
use ghostcentre_core::borel::make_borel;
use ghostcentre_core::families::{
    build_algebra_with_rep, rep_matrix_of_element, rep_matrix_of_word,
};
use ghostcentre_core::pbw::{GeneratorOrdering, PbwEngine};
use ghostcentre_core::prng::SplitMix64;
use ghostcentre_core::scalar::{rat_int, FieldKind, FieldScalar};

fn random_word(rng: &mut SplitMix64, dim: usize, max_len: usize) -> Vec<u16> {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len).map(|_| rng.below(dim as u64) as u16).collect()
}

#[test]
fn pbw_normal_ordering_matches_supermatrix_oracle() {
    for desc in ["gl(1|1)", "gl(2|1)"] {
        let (g, rep) = build_algebra_with_rep(desc).unwrap();
        let rep = rep.unwrap();
        let eng = PbwEngine::coset(&g);
        let mut rng = SplitMix64::new(0xABCD_0001);
        for _ in 0..250 {
            let w = random_word(&mut rng, g.dim(), 6);
            let nf = eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
            let direct = rep_matrix_of_word(&rep, &w);
            let via_nf = rep_matrix_of_element(&rep, &nf).unwrap();
            assert_eq!(direct, via_nf, "{desc}: word {w:?}");
        }
    }
}

#[test]
fn pbw_oracle_covers_osp_and_q() {
    for desc in ["osp(1|2)", "osp(1|4)", "q(1)"] {
        let (g, rep) = build_algebra_with_rep(desc).unwrap();
        let rep = rep.unwrap();
        let eng = PbwEngine::coset(&g);
        let mut rng = SplitMix64::new(0xABCD_0002);
        for _ in 0..100 {
            let w = random_word(&mut rng, g.dim(), 5);
            let nf = eng.from_word(&w, FieldScalar::Rat(rat_int(1)));
            assert_eq!(
                rep_matrix_of_word(&rep, &w),
                rep_matrix_of_element(&rep, &nf).unwrap(),
                "{desc}"
            );
        }
    }
}

#[test]
fn reordering_round_trips_are_identities() {
    for desc in ["gl(1|1)", "gl(2|1)", "osp(1|2)"] {
        let (g, _) = build_algebra_with_rep(desc).unwrap();
        let borel = make_borel(&g, None).unwrap();
        let coset = PbwEngine::coset(&g);
        let hc = PbwEngine::new(&g, borel.hc_ordering(&g));
        let decl = PbwEngine::new(&g, GeneratorOrdering::declaration(&g));
        let mut rng = SplitMix64::new(0xABCD_0003);
        for _ in 0..40 {
            let w = random_word(&mut rng, g.dim(), 5);
            let e = coset.from_word(&w, FieldScalar::Rat(rat_int(1)));
            let through = coset.convert(&decl.convert(&hc.convert(&e)));
            assert_eq!(e.terms, through.terms, "{desc}");
        }
    }
}

#[test]
fn twisted_adjoint_is_a_module_action() {
    // ad_phi([a,b]) = ad_phi(a) ad_phi(b) - (-1)^{|a||b|} ad_phi(b) ad_phi(a)
    // exhaustively over basis pairs, applied to a small set of elements.
    for desc in ["gl(1|1)", "osp(1|2)"] {
        let (g, _) = build_algebra_with_rep(desc).unwrap();
        let eng = PbwEngine::coset(&g);
        let autos = [GradedAutomorphism::identity(), GradedAutomorphism::delta()];
        let mut probes = vec![eng.one(FieldKind::Rational)];
        for i in 0..g.dim() {
            probes.push(eng.gen(i, FieldKind::Rational));
        }
        for phi in &autos {
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    let sign = g.parity(a).sign_product(g.parity(b));
                    for v in &probes {
                        let ab = eng.twisted_adjoint(phi, a, &eng.twisted_adjoint(phi, b, v).unwrap()).unwrap();
                        let ba = eng.twisted_adjoint(phi, b, &eng.twisted_adjoint(phi, a, v).unwrap()).unwrap();
                        let mut lhs = ab.sub(&ba.scaled(&FieldScalar::Rat(rat_int(sign as i64)))).unwrap();
                        for (k, c) in g.bracket_basis(a, b) {
                            let t = eng
                                .twisted_adjoint(phi, *k, v)
                                .unwrap()
                                .scaled(&FieldScalar::Rat(c.clone()));
                            lhs = lhs.sub(&t).unwrap();
                        }
                        assert!(lhs.is_zero(), "{desc}: pair ({a},{b})");
                    }
                }
            }
        }
    }
}

#[test]
fn symbolic_twist_is_also_an_action_on_gl11() {
    let (g, _) = build_algebra_with_rep("gl(1|1)").unwrap();
    let eng = PbwEngine::coset(&g);
    let phi = GradedAutomorphism::Scale(FieldScalar::fun_c());
    let one = eng.one(FieldKind::RatFun);
    for a in 0..g.dim() {
        for b in 0..g.dim() {
            let sign = g.parity(a).sign_product(g.parity(b));
            let ab = eng.twisted_adjoint(&phi, a, &eng.twisted_adjoint(&phi, b, &one).unwrap()).unwrap();
            let ba = eng.twisted_adjoint(&phi, b, &eng.twisted_adjoint(&phi, a, &one).unwrap()).unwrap();
            let mut lhs = ab
                .sub(&ba.scaled(&FieldScalar::from_int(sign as i64, FieldKind::RatFun)))
                .unwrap();
            for (k, c) in g.bracket_basis(a, b) {
                let t = eng
                    .twisted_adjoint(&phi, *k, &one)
                    .unwrap()
                    .scaled(&FieldScalar::Rat(c.clone()));
                lhs = lhs.sub(&t).unwrap();
            }
            assert!(lhs.is_zero());
        }
    }
}

#[test]
fn multiplication_laws_on_random_triples() {
    for desc in ["gl(1|1)", "gl(2|1)"] {
        let (g, _) = build_algebra_with_rep(desc).unwrap();
        let eng = PbwEngine::coset(&g);
        let mut rng = SplitMix64::new(0xABCD_0004);
        for _ in 0..25 {
            let mk = |rng: &mut SplitMix64| {
                let w1 = random_word(rng, g.dim(), 3);
                let w2 = random_word(rng, g.dim(), 3);
                let a = eng.from_word(&w1, FieldScalar::Rat(rat_int(rng.int_in(3))));
                let b = eng.from_word(&w2, FieldScalar::Rat(rat_int(rng.int_in(3))));
                a.add(&b).unwrap()
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let c = mk(&mut rng);
            let ab_c = eng.multiply(&eng.multiply(&a, &b).unwrap(), &c).unwrap();
            let a_bc = eng.multiply(&a, &eng.multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc, "{desc}: associativity");
            let right = eng.multiply(&a, &b.add(&c).unwrap()).unwrap();
            let split = eng
                .multiply(&a, &b)
                .unwrap()
                .add(&eng.multiply(&a, &c).unwrap())
                .unwrap();
            assert_eq!(right, split, "{desc}: distributivity");
            // filtration degree is submultiplicative
            let f = eng.multiply(&a, &b).unwrap();
            assert!(f.filtration_degree(&g) <= a.filtration_degree(&g) + b.filtration_degree(&g));
        }
    }
}
