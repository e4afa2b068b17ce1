#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace vmodel {

// Calls fn(perm, sign) for every permutation of 0..m-1 in lexicographic
// order. The sign is updated incrementally: one lexicographic step is a swap
// followed by reversing a suffix of length L, i.e. 1 + L/2 transpositions.
template <class Fn>
void for_each_signed_permutation(int m, Fn&& fn)
{
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    int sign = 1;
    while (true) {
        fn(std::span<const int>(perm), sign);
        int i = m - 2;
        while (i >= 0 && perm[i] > perm[i + 1])
            --i;
        if (i < 0)
            return;
        int j = m - 1;
        while (perm[j] < perm[i])
            --j;
        std::swap(perm[i], perm[j]);
        int suffix = m - 1 - i;
        std::reverse(perm.begin() + i + 1, perm.end());
        if ((1 + suffix / 2) % 2 == 1)
            sign = -sign;
    }
}

// Calls fn(subset) for every k-subset of 0..n-1, increasing lists in
// lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn)
{
    if (k > n || k < 0)
        return;
    std::vector<int> s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        fn(std::span<const int>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

// Calls fn(tuple) for every tuple in choices^length, lexicographically.
template <class Fn>
void for_each_tuple(std::span<const int> choices, int length, Fn&& fn)
{
    if (length > 0 && choices.empty())
        return;
    std::vector<int> digit(static_cast<std::size_t>(length), 0);
    std::vector<int> tuple(static_cast<std::size_t>(length), length > 0 ? choices[0] : 0);
    while (true) {
        fn(std::span<const int>(tuple));
        int pos = length - 1;
        while (pos >= 0 && digit[pos] + 1 == static_cast<int>(choices.size())) {
            digit[pos] = 0;
            tuple[pos] = choices[0];
            --pos;
        }
        if (pos < 0)
            return;
        tuple[pos] = choices[static_cast<std::size_t>(++digit[pos])];
    }
}

} // namespace vmodel
