//! Applying a doubled Hecke word to a basis vector of V̄^⊗r.

use doubled_hecke::cli::format_vector;
use doubled_hecke::dha::{evaluate_word, DHWord};
use doubled_hecke::scalar::ExactField;
use doubled_hecke::tensor::{SparseVector, TensorShape};

fn main() {
    let f = ExactField;
    let shape = TensorShape::enhanced(2, 3);
    let v = shape.index(&[2, 1, 3]).unwrap();
    for w in ["T1", "T2", "x2:[2,1]", "x2 T2", "T2 T1", "x0"] {
        let word: DHWord = w.parse().unwrap();
        let op = evaluate_word(&word, &shape, &f).unwrap();
        let image = op.apply(&SparseVector::basis(shape.dim(), v.encode(), &f));
        println!("{v} · {word} = {}", format_vector(&image, &shape));
    }
}
