// A skew-symmetric `A` with `A x = y` for `y` orthogonal to `conj(x)`.
//
// ```text
// cargo run --example skew_lemma
// ```

use corona::numcore::{c, Cx};
use corona::skew::{bilinear, norm, skew_solve};

pub struct Lemma {
    pub residual: f64,
    pub frobenius: f64,
    pub bound: f64,
    pub antisymmetry: f64,
}

pub fn run() -> corona::Result<Lemma> {
    let x = vec![c(1.0, 0.5), c(-0.3, 0.2), c(0.0, 1.0), c(0.7, -0.7)];
    let y0 = vec![c(0.2, 0.0), c(1.0, -1.0), c(0.5, 0.5), c(0.0, 0.3)];
    // project y0 so that sum x_i y_i = 0
    let p = bilinear(&x, &y0) / (norm(&x) * norm(&x));
    let y: Vec<Cx> = y0.iter().zip(&x).map(|(v, u)| v - p * u.conj()).collect();

    let a = skew_solve(&x, &y)?;
    let ax = a.apply(&x)?;
    let diff: Vec<Cx> = ax.iter().zip(&y).map(|(u, v)| u - v).collect();
    let dense = a.to_dense();
    let n = x.len();
    let antisymmetry = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (dense[i][j] + dense[j][i]).norm())
        .fold(0.0, f64::max);
    Ok(Lemma {
        residual: norm(&diff),
        frobenius: a.frobenius_norm(),
        bound: (2.0 * n as f64).sqrt() * norm(&y) / norm(&x),
        antisymmetry,
    })
}

fn main() -> corona::Result<()> {
    let l = run()?;
    println!("|Ax - y| = {:.1e}", l.residual);
    println!("|A|_F = {:.4} <= {:.4}", l.frobenius, l.bound);
    println!("max |A + A^T| = {:.1e}", l.antisymmetry);
    Ok(())
}
