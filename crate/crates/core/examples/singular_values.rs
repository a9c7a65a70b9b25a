//! Exact arithmetic in ℚ(u), u = (2kk')^{1/3} at e^{-π√163}: the tabulated
//! values, the chain that produces G₂ = -1448, and the recovery of the two
//! Chudnovsky constants.
//!
//! ```text
//! cargo run --release --example singular_values
//! ```

use modpi::singular::{
    constant_recovery, g2_chain, verify_f_value, verify_table_consistency, SingularContext, ThetaRatioTable,
};

fn main() {
    let ctx = SingularContext::new(163).unwrap();
    println!("u is the real root of {}", ctx.minpoly_s);
    println!("u ≈ {}", ctx.s_value(128).unwrap());

    let table = ThetaRatioTable::new(&ctx);
    for (i, v) in table.function_values().unwrap().iter().enumerate() {
        let name = if i == 0 { "f".to_string() } else { format!("g{i}") };
        println!("{name:>3}(i/√163) = {v}");
    }

    let chain = g2_chain().unwrap();
    println!("A         = {}", chain.a);
    println!("A(1+u³)   = {}", chain.a_scaled);
    println!("radical   = {}", chain.radical);
    println!("G2        = {}", chain.value);

    for r in [verify_f_value(128).unwrap(), verify_table_consistency(128).unwrap(), constant_recovery()] {
        println!("{r}");
    }
}
