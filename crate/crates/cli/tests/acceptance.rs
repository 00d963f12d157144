//! Acceptance suite: every check is exact (equalities in exact fields; no
//! tolerances exist anywhere). One line is printed per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion report.

use std::time::Instant;

use ghostcentre_cli::suite;

fn report(n: u32, name: &str, result: &suite::CheckResult, millis: u128) -> bool {
    match result {
        Ok(note) => {
            println!("criterion {n:2} ({name}): PASS [{millis} ms] - {note}");
            true
        }
        Err(why) => {
            println!("criterion {n:2} ({name}): FAIL [{millis} ms] - {why}");
            false
        }
    }
}

macro_rules! criterion_test {
    ($fnname:ident, $n:expr, $label:expr, $call:expr) => {
        #[test]
        fn $fnname() {
            let t = Instant::now();
            let r = $call;
            let ok = report($n, $label, &r, t.elapsed().as_millis());
            assert!(ok, "{}", r.err().unwrap_or_default());
        }
    };
}

criterion_test!(
    acceptance_01_closed_ghosts,
    1,
    "closed-form ghosts vs solver",
    suite::criterion_1_closed_ghosts()
);

criterion_test!(
    acceptance_02_semisimplicity,
    2,
    "semisimplicity via counit",
    suite::criterion_2_semisimplicity()
);

criterion_test!(
    acceptance_03_projectivity_polynomial,
    3,
    "projectivity polynomial on the dominant grid",
    suite::criterion_3_projectivity_polynomial(5)
);

criterion_test!(
    acceptance_04_degree_bound,
    4,
    "Harish-Chandra degree bound",
    suite::criterion_4_degree_bound(0xACCE_0001, 200)
);

criterion_test!(
    acceptance_05_ghost_images,
    5,
    "ghost-centre images divisible by t_g and shifted-invariant",
    suite::criterion_5_ghost_images(4)
);

criterion_test!(
    acceptance_06_vandermonde,
    6,
    "Vandermonde decomposition over Q(c)",
    suite::criterion_6_vandermonde()
);

criterion_test!(
    acceptance_07_central_elements,
    7,
    "explicit central elements and the symbolic limit",
    suite::criterion_7_central_elements()
);

criterion_test!(
    acceptance_08_representation_oracle,
    8,
    "representation oracle on Kac modules",
    suite::criterion_8_representation_oracle(5)
);

criterion_test!(
    acceptance_09_appendix_q1,
    9,
    "non-Cartan-even path on q(1)",
    suite::criterion_9_appendix_q1(5)
);

criterion_test!(
    acceptance_10_engine_soundness,
    10,
    "PBW soundness, round trips, validations",
    suite::criterion_10_engine_soundness(0xACCE_0002, 500)
);
