//! Theta series of the eight quaternary Gram forms for p = 163: the
//! Eisenstein span identity, their independence, and the arithmetic
//! invariants that predict how many forms there are.
//!
//! ```text
//! cargo run --release --example theta_span -- 400
//! ```

use modpi::quatforms::{
    arith_invariants, eisenstein_combination, gram_thetas, independence_rank, span_identity_with, GramSet, SPAN_WEIGHTS,
};

fn main() {
    let order: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let set = GramSet::embedded_p163();

    let inv = arith_invariants(set.p).expect("163 is an odd prime");
    println!("p = {}: genus {}, h = {}, type number {}", inv.p, inv.genus_g, inv.class_number_h, inv.type_number_t);
    println!("{} Gram matrices on file", set.matrices.len());

    let thetas = gram_thetas(&set, order);
    for ((id, _), t) in set.matrices.iter().zip(&thetas) {
        let head: Vec<String> = (0..=12).map(|e| t.int_coeff(e).unwrap_or_default().to_string()).collect();
        println!("θ_I{id} = {} ...", head.join(" "));
    }

    let lhs = eisenstein_combination(set.p, 12);
    let head: Vec<String> = (0..=12).map(|e| lhs.int_coeff(e).unwrap_or_default().to_string()).collect();
    println!("163 P(q^163) - P(q) = {} ...", head.join(" "));
    println!("weights {:?}", SPAN_WEIGHTS);
    println!("{}", span_identity_with(&set, &SPAN_WEIGHTS, order));

    let r = independence_rank(&thetas, order.min(100));
    println!("rank {} of {} (certified: {})", r.rank, r.rows, r.certified_full);
}
