//! Multiplication in the Hecke algebra of S_3 and the q-symmetrizer x_λ.

use doubled_hecke::combinat::{Composition, Permutation};
use doubled_hecke::hecke::{q_symmetrizer, HeckeElement};
use doubled_hecke::scalar::{ExactField, Field};

fn main() {
    let f = ExactField;
    let t1 = HeckeElement::generator(1, 3, &f);
    let t2 = HeckeElement::generator(2, 3, &f);

    let t1t1 = t1.mul(&t1, &f);
    println!("T1 T1 = {}", t1t1.to_json());

    let lhs = t1.mul(&t2, &f).mul(&t1, &f);
    let rhs = t2.mul(&t1, &f).mul(&t2, &f);
    println!("braid T1 T2 T1 = T2 T1 T2: {}", lhs == rhs);

    let w0 = Permutation::from_one_line(&[3, 2, 1]).unwrap();
    let inv = HeckeElement::basis_inverse(&w0, &f);
    let prod = HeckeElement::basis(w0, &f).mul(&inv, &f);
    println!("T_w0 T_w0^-1 = 1: {}", prod == HeckeElement::unit(3, &f));

    let lambda = Composition(vec![2, 1]);
    let x = q_symmetrizer(&lambda, &f);
    println!("x_(2,1) = {}", x.to_json());
    println!("x_(2,1) T1 = q^-1 x_(2,1): {}", x.mul(&t1, &f) == x.scale(&f.q_inv()));
}
