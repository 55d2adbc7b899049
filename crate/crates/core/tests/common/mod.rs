//! Independent blade-product oracle shared by the algebra and acceptance tests.

use g3bell::ga::DIM;

/// Basis blades as ascending lists of generator indices.
pub const BLADES: [&[u8]; DIM] = [&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]];

/// Multiplies two blades by concatenating their generators, bubble-sorting
/// with a sign flip per transposition, then cancelling `e_i e_i = +1`.
pub fn oracle_product(i: usize, j: usize) -> (f64, usize) {
    let mut word: Vec<u8> = BLADES[i].iter().chain(BLADES[j]).copied().collect();
    let mut sign = 1.0;
    for pass in 0..word.len() {
        for k in 0..word.len().saturating_sub(1 + pass) {
            if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                sign = -sign;
            }
        }
    }
    let mut reduced: Vec<u8> = Vec::new();
    for g in word {
        if reduced.last() == Some(&g) {
            reduced.pop();
        } else {
            reduced.push(g);
        }
    }
    let k = BLADES
        .iter()
        .position(|b| *b == reduced.as_slice())
        .expect("reduced word is a basis blade");
    (sign, k)
}
