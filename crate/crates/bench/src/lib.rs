//! Shared inputs for the criterion benches.

use invtoep_core::catalog::{phi_coeffs, CatalogId};
use invtoep_core::{ClassKind, PhiSpec};

/// Generators with both classes, in a fixed order.
pub fn bench_cases() -> Vec<(&'static str, ClassKind, PhiSpec)> {
    [CatalogId::HalfPlane, CatalogId::Exp, CatalogId::Cardioid, CatalogId::Parabolic]
        .into_iter()
        .flat_map(|id| {
            let phi = phi_coeffs(&id).expect("built-in generator");
            ClassKind::ALL.into_iter().map(move |k| (id.name(), k, phi))
        })
        .collect()
}
