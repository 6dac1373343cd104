//! The combinatorial decomposition of V̄^⊗r, without building any matrix.

use doubled_hecke::duality::decomposition_audit;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, r) = match args[..] {
        [n, r] => (n, r),
        _ => (2, 4),
    };
    let audit = decomposition_audit(n, r);
    println!("{audit}");
    println!("(n+1)^r = {}", (n as u128 + 1).pow(r as u32));
}
