#include "permcode/lehmer.hpp"

#include <vector>

namespace permcode {

SubexcedantSeq lehmer_encode(const Permutation& p) {
    const int n = p.size();
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    for (int j = 2; j <= n; ++j) {
        int larger = 0;
        for (int i = 1; i < j; ++i)
            if (p.at(i) > p.at(j)) ++larger;
        code[static_cast<std::size_t>(j - 1)] = larger;
    }
    return SubexcedantSeq::from(std::move(code));
}

Permutation lehmer_decode(const SubexcedantSeq& s) {
    const int n = s.size();
    // Unused values kept sorted ascending; n is small so erase-from-vector is fine.
    std::vector<int> unused(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) unused[static_cast<std::size_t>(v - 1)] = v;
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        // j values remain; the (j - s_j)-th smallest has exactly s_j larger ones left of it.
        const auto k = static_cast<std::size_t>(j - s.at(j) - 1);
        out[static_cast<std::size_t>(j - 1)] = unused[k];
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return Permutation::from(std::move(out));
}

int dumont_stat(const Permutation& p) {
    return static_cast<int>(row_set(lehmer_encode(p)).size());
}

}  // namespace permcode
