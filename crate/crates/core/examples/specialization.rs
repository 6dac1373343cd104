//! The same certification over Q(q), at q = 2 and at a random point mod p.

use std::time::Instant;

use doubled_hecke::duality::certify;
use doubled_hecke::scalar::ScalarMode;

fn main() {
    let (n, r) = (2, 3);
    for mode in ["exact", "qnum:2", "fp", "fp:2305843009213693951"] {
        let m: ScalarMode = mode.parse().unwrap();
        let start = Instant::now();
        match certify(n, r, false, &m, 42) {
            Ok(rep) => println!(
                "{mode:>14}: levi {} dha {} in {:?}",
                rep.dim_levi_span,
                rep.dim_dha_span,
                start.elapsed()
            ),
            Err(e) => println!("{mode:>14}: {e}"),
        }
    }
}
