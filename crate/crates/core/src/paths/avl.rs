/// All `2^n` binary words of length `n`, lexicographically.
pub fn binary_words(n: usize) -> Vec<Vec<u8>> {
    (0..1usize << n)
        .map(|code| (0..n).rev().map(|i| ((code >> i) & 1) as u8).collect())
        .collect()
}

/// All words with `content[i]` copies of letter `i`, lexicographically.
pub fn words_with_content(content: &[usize]) -> Vec<Vec<u8>> {
    let mut w: Vec<u8> = content
        .iter()
        .enumerate()
        .flat_map(|(letter, &m)| std::iter::repeat_n(letter as u8, m))
        .collect();
    let mut out = vec![w.clone()];
    while next_permutation(&mut w) {
        out.push(w.clone());
    }
    out
}

fn next_permutation(w: &mut [u8]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len())
        .rev()
        .find(|&j| w[j] > w[i - 1])
        .expect("pivot has a successor");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Words of length `2n` with `n` ones.
pub fn balanced_words(n: usize) -> Vec<Vec<u8>> {
    words_with_content(&[n, n])
}

/// Paths `(0,0) -> (n,n)` that never touch the diagonals `x - y = w` or
/// `x - y = -w`.
pub fn enumerate_avl(n: usize, w: usize) -> Vec<Vec<u8>> {
    let w = w as i64;
    balanced_words(n)
        .into_iter()
        .filter(|b| {
            let mut d = 0i64;
            b.iter().all(|&s| {
                d += if s == 0 { 1 } else { -1 };
                d.abs() < w
            })
        })
        .collect()
}
