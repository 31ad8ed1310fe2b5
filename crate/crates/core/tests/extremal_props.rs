mod common;

use common::*;
use invtoep_core::bounds::{theorem_bound, theorem_value};
use invtoep_core::catalog::{certificate_entries, phi_coeffs};
use invtoep_core::minda::coeffs_from_schwarz;
use invtoep_core::{attainment, extremal_coeffs, ClassKind, FunctionalKind, PhiSpec, SchwarzTriple};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = ClassKind> {
    prop_oneof![Just(ClassKind::Starlike), Just(ClassKind::Convex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn extremal_is_the_rotation(k in kind(), b in real_phi()) {
        let phi = PhiSpec::new(b[0], b[1], b[2]).unwrap();
        let e = extremal_coeffs(k, &phi, 4);
        let rot = SchwarzTriple::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        let cb = coeffs_from_schwarz(k, &phi, &rot).unwrap();
        for (n, want) in [(2, cb.a2), (3, cb.a3), (4, cb.a4)] {
            prop_assert!(close(e.coeff(n), want, 1e-12), "a{}", n);
        }
    }

    #[test]
    fn attainment_is_the_formula(k in kind(), b in real_phi()) {
        let phi = PhiSpec::new(b[0], b[1], b[2]).unwrap();
        for f in FunctionalKind::ALL {
            prop_assert!(close_f(attainment(f, k, &phi), theorem_value(f, k, &phi.as_array()), 1e-12), "{}", f);
        }
    }
}

#[test]
fn catalog_certificates() {
    let mut certified = 0;
    for (id, class) in certificate_entries() {
        let phi = phi_coeffs(&id).unwrap();
        for f in FunctionalKind::ALL {
            let r = theorem_bound(f, class, &phi);
            if r.applicable {
                assert!(close_f(attainment(f, class, &phi), r.bound, 1e-12), "{id} {class} {f}");
                certified += 1;
            }
        }
    }
    assert!(certified >= 30, "{certified}");
}

#[test]
fn convex_b4_witness() {
    let phi = PhiSpec::new(1.0, 0.5, 1.0 / 6.0).unwrap();
    let b4 = extremal_coeffs(ClassKind::Convex, &phi, 4).bundle().b4;
    let want = c(0.0, (6.0 - 3.5 + 1.0 / 3.0) / 24.0);
    assert!(close(b4, want, 1e-15));
}

#[test]
fn starlike_log_witness() {
    let phi = PhiSpec::new(1.0, 1.0, 0.5).unwrap();
    let cb = extremal_coeffs(ClassKind::Starlike, &phi, 4).bundle();
    assert!(close(cb.g1, c(0.0, -0.5), 1e-15));
    assert!(close(cb.g2, c((1.0 - 2.0) / 4.0, 0.0), 1e-15));
}
