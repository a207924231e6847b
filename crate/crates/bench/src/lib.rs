//! Fixtures shared by the criterion benchmarks.

use std::sync::Arc;

use gsdec_core::modify::{periodicity_projection, reencode};
use gsdec_core::{ErrorSpec, FieldCtx, GsaParams, Message, ModifiedVector, RsCode, TimeVector};

/// A received vector for one code, with its modified forms.
pub struct Fixture {
    pub name: String,
    pub field: Arc<FieldCtx>,
    pub params: GsaParams,
    pub received: TimeVector,
    pub reencoded: ModifiedVector,
    pub projected: ModifiedVector,
}

impl Fixture {
    /// Encodes a fixed message over GF(`q`), adds `tau` errors from `seed`, and
    /// applies re-encoding on the first k positions and the projection with `p`.
    pub fn new(field: FieldCtx, k: usize, s: usize, ell: usize, p: usize, seed: u64) -> Self {
        let field = Arc::new(field);
        let rs = RsCode::new(field.clone(), k).expect("valid code");
        let params = GsaParams::new(rs.n(), k, s, ell, None).expect("valid parameters");
        let msg = Message::from_codes(
            &(1..=k as u32)
                .map(|i| i % field.order())
                .collect::<Vec<_>>(),
        );
        let c = rs.encode(&msg).expect("message length k");
        let (received, _) = rs
            .add_errors(
                &c,
                &ErrorSpec::Random {
                    weight: params.tau,
                    seed,
                },
            )
            .expect("tau < n");
        let positions: Vec<usize> = (0..k).collect();
        let reencoded = reencode(&rs, &received, &positions).expect("k distinct positions");
        let projected = periodicity_projection(&rs, &received, p).expect("p divides n");
        Fixture {
            name: format!("q{}_n{}_k{k}_s{s}_l{ell}_p{p}", field.order(), rs.n()),
            field,
            params,
            received,
            reencoded,
            projected,
        }
    }
}

/// The benchmark fixtures.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture::new(FieldCtx::prime(7).unwrap(), 2, 2, 3, 3, 1),
        Fixture::new(FieldCtx::new(2, 4, None).unwrap(), 3, 1, 2, 5, 1),
        Fixture::new(FieldCtx::new(2, 4, None).unwrap(), 3, 2, 3, 15, 1),
        Fixture::new(FieldCtx::new(2, 5, None).unwrap(), 5, 2, 4, 31, 1),
    ]
}
