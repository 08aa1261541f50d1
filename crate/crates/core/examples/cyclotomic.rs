use vanishkit::chartab::CyclotomicInteger;

fn main() {
    // (-1 + sqrt 5)/2 = z5 + z5^4, which satisfies x^2 + x - 1 = 0
    let phi = CyclotomicInteger::from_exponent_sum(5, &[(1, 1), (4, 1)]);
    let check = &(&(&phi * &phi) + &phi) - &CyclotomicInteger::one(5);
    println!("phi = {phi}, phi^2 + phi - 1 = {check}");

    // 1 + z3 + z3^2 = 0
    let sum = CyclotomicInteger::from_exponent_sum(3, &[(0, 1), (1, 1), (2, 1)]);
    println!("1 + z3 + z3^2 = {sum}, zero: {}", sum.is_zero());

    let i = CyclotomicInteger::root_power(4, 1);
    println!("i * conj(i) = {}", &i * &i.conj());
    println!("json: {}", serde_json::to_string(&phi).unwrap());
}
