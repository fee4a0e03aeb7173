// Kernels, ranks and solves over `Q` and `F_p`, all exact.

use quiver_tensor::linalg::{Field, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let m = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank over Q: {}", m.rank());
    let kernel = m.kernel_basis();
    for v in &kernel {
        assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
    }
    println!("kernel: {:?}", kernel.iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());

    // 2x = 1 has the solution 1/2 over Q and 2 over F_3.
    let two = Matrix::from_i64(q, &[&[2]]);
    let half = two.solve(&[q.one()])?.particular.ok_or("no solution")?;
    println!("1/2 = {}", half[0]);
    let f3 = Field::prime(3)?;
    let two3 = Matrix::from_i64(f3, &[&[2]]);
    let inv = two3.solve(&[f3.one()])?.particular.ok_or("no solution")?;
    println!("1/2 in F_3 = {}", inv[0]);
    assert_eq!(inv[0], f3.from_i64(2));

    // rank(a ⊗ b) = rank(a) rank(b)
    let a = Matrix::from_i64(q, &[&[1, 1], &[0, 0]]);
    let b = Matrix::from_i64(q, &[&[1, 0], &[0, 1]]);
    let ab = a.kronecker(&b);
    println!("kronecker: {ab:?}");
    assert_eq!(ab.rank(), a.rank() * b.rank());

    // A matrix singular mod 5 but not over Q.
    let over_q = Matrix::from_i64(q, &[&[1, 2], &[3, 1]]);
    let over_f5 = Matrix::from_i64(Field::prime(5)?, &[&[1, 2], &[3, 1]]);
    println!("det 1-6 = -5: rank over Q {}, over F_5 {}", over_q.rank(), over_f5.rank());
    assert_eq!((over_q.rank(), over_f5.rank()), (2, 1));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
