use num_integer::Roots;

/// Cantor pairing `<i,j> = j + (i+j)(i+j+1)/2`.
pub fn pairing(i: u64, j: u64) -> u64 {
    let s = i + j;
    j + s * (s + 1) / 2
}

pub fn unpairing(k: u64) -> (u64, u64) {
    // largest w with w(w+1)/2 <= k
    let mut w = ((8 * k as u128 + 1).sqrt() as u64 - 1) / 2;
    while w * (w + 1) / 2 > k {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= k {
        w += 1;
    }
    let j = k - w * (w + 1) / 2;
    (w - j, j)
}
