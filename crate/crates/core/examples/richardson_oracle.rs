//! Sweeps GL_n(F_q) and classifies each matrix by its pair of cells
//! (BwB, Bw'B⁻). The intersection is nonempty exactly when w' <= w.
//!
//!     cargo run --release --example richardson_oracle

use bruhatkit::oracle::{cell_bwb, cell_bwb_minus, verify_richardson, FqMatrix};

fn main() -> bruhatkit::error::Result<()> {
    let g = FqMatrix::parse("01/11", 2)?;
    println!("{g:?} lies in B[{}]B and B[{}]B⁻", cell_bwb(&g)?, cell_bwb_minus(&g)?);

    for (n, q) in [(2, 2), (2, 3), (2, 5), (3, 2)] {
        let report = verify_richardson(n, q)?;
        println!(
            "GL_{n}(F_{q}): {:>5} matrices, {:>2} of {:>2} comparable pairs realized, {} parabolic checks, passed: {}",
            report.gl_order,
            report.pairs.len(),
            report.expected_pairs,
            report.parabolic.len(),
            report.passed()
        );
    }

    let report = verify_richardson(3, 2)?;
    println!("\nGL_3(F_2) pair counts:");
    for p in &report.pairs {
        println!("  w = {}  w' = {}  {:>3}", p.w, p.w_prime, p.count);
    }
    Ok(())
}
