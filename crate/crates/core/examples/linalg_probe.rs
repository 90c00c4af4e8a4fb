use ndarray::Array2;
use ndarray_linalg::{CholeskyInto, Eigh, UPLO};
use std::time::Instant;

fn main() {
    for &n in &[56usize, 100, 400, 625] {
        let mut a = Array2::<f64>::eye(n);
        for i in 0..n {
            for j in 0..n {
                let d = (i as f64 - j as f64) / n as f64;
                a[[i, j]] += (-d * d / 0.09).exp();
            }
        }
        let t = Instant::now();
        let reps = 20;
        for _ in 0..reps {
            let _l = a.clone().cholesky_into(UPLO::Lower).unwrap();
        }
        let chol_ms = t.elapsed().as_secs_f64() * 1000.0 / reps as f64;
        let t = Instant::now();
        let (w, _v) = a.eigh(UPLO::Lower).unwrap();
        println!(
            "n={n}: cholesky {chol_ms:.2} ms, eigh {:.1} ms, min eig {:.3}",
            t.elapsed().as_secs_f64() * 1000.0,
            w[0]
        );
    }
}
