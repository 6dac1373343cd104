//! The projectors G_l onto the strata with exactly l non-η letters, built
//! from the image of H_{n+1}.

use doubled_hecke::duality::{g_projector, levi_operators};
use doubled_hecke::linalg::algebra_closure;
use doubled_hecke::scalar::ExactField;
use doubled_hecke::tensor::{SparseOperator, TensorShape};

fn main() {
    let f = ExactField;
    let (n, r) = (2, 2);
    let shape = TensorShape::enhanced(n, r);
    let d = shape.dim();
    let closure = algebra_closure(&levi_operators(n, r, &f), d, &f);
    let mut sum = SparseOperator::zero(d);
    for l in 0..=r {
        let g = g_projector(l, n, r, &f).unwrap();
        let rank = (0..d).filter(|&j| !g.column(j).is_zero()).count();
        println!(
            "G_{l}: idempotent {}, image spanned by {rank} basis vectors, in closure {}",
            g.compose(&g) == g,
            closure.contains(&g)
        );
        sum = sum.add(&g);
    }
    println!("Σ G_l = 1: {}", sum == SparseOperator::identity(d, &f));
}
