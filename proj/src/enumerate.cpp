#include "permcode/enumerate.hpp"

#include "permcode/inverse.hpp"
#include "permcode/lehmer.hpp"
#include "permcode/slicer.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace permcode {

namespace {

// 20! is the largest factorial that fits in 64 bits.
constexpr int kHardLimit = 20;

template <class Fn>
auto run_blocks(std::uint64_t total, int jobs, Fn fn) {
    using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    const std::uint64_t blocks = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total);
    std::vector<Result> results(blocks);
    auto bounds = [&](std::uint64_t b) { return total / blocks * b + std::min(b, total % blocks); };
    if (blocks == 1) {
        results[0] = fn(0, total);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b)
        workers.emplace_back([&, b] { results[b] = fn(bounds(b), bounds(b + 1)); });
    for (auto& w : workers) w.join();
    return results;
}

template <class Visit>
void visit_perms(int n, std::uint64_t begin, std::uint64_t end, Visit visit) {
    if (begin >= end) return;
    std::vector<int> cur = unrank_permutation(n, begin).entries();
    for (std::uint64_t r = begin; r < end; ++r) {
        visit(Permutation::from(cur));
        std::next_permutation(cur.begin(), cur.end());
    }
}

template <class Visit>
void visit_seqs(int n, std::uint64_t begin, std::uint64_t end, Visit visit) {
    if (begin >= end) return;
    std::vector<int> cur = unrank_subexcedant(n, begin).entries();
    for (std::uint64_t r = begin; r < end; ++r) {
        visit(SubexcedantSeq::from(cur));
        for (int i = n - 1; i >= 0; --i) {
            if (cur[static_cast<std::size_t>(i)] < i) {
                ++cur[static_cast<std::size_t>(i)];
                break;
            }
            cur[static_cast<std::size_t>(i)] = 0;
        }
    }
}

std::uint64_t mask_of(const PositionSet& s) {
    std::uint64_t m = 0;
    for (int p : s.positions()) m |= std::uint64_t{1} << p;
    return m;
}

// Per-block partial result of a pass/fail sweep.
struct Sweep {
    std::uint64_t cases = 0;
    std::optional<std::string> counterexample;

    void fail(std::string what) {
        if (!counterexample) counterexample = std::move(what);
    }
};

Sweep merge_sweeps(const std::vector<Sweep>& parts) {
    Sweep out;
    for (const auto& p : parts) {
        out.cases += p.cases;
        if (p.counterexample) out.fail(*p.counterexample);
    }
    return out;
}

CheckDetail detail_from(std::string name, const Sweep& sweep) {
    return CheckDetail{std::move(name), !sweep.counterexample, sweep.counterexample};
}

void finish(Report& r) {
    r.pass = std::all_of(r.details.begin(), r.details.end(), [](const CheckDetail& d) { return d.pass; });
    r.counterexample.reset();
    for (const auto& d : r.details) {
        if (!d.pass) {
            r.counterexample = d.name + ": " + d.counterexample.value_or("");
            break;
        }
    }
}

std::string tuple_line(const FiveTuple& t, const std::array<std::string_view, 5>& names) {
    std::string out;
    for (std::size_t i = 0; i < 5; ++i) {
        if (i) out += ' ';
        out += std::string(names[i]) + '=' + t.sets[i].to_string();
    }
    return out;
}

}  // namespace

void check_enumeration_size(int n, int cap) {
    if (n < 1) throw InvalidInput("n must be at least 1, got " + std::to_string(n));
    const int limit = std::min(cap, kHardLimit);
    if (n > limit) {
        throw InvalidInput("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(limit) +
                           (cap < kHardLimit ? " (raise it explicitly to go further)" : ""));
    }
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

PermutationStream::PermutationStream(int n, int cap) {
    check_enumeration_size(n, cap);
    current_.resize(static_cast<std::size_t>(n));
    std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
    if (done_) return std::nullopt;
    auto out = Permutation::from(current_);
    done_ = !std::next_permutation(current_.begin(), current_.end());
    return out;
}

SubexcedantStream::SubexcedantStream(int n, int cap) {
    check_enumeration_size(n, cap);
    current_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<SubexcedantSeq> SubexcedantStream::next() {
    if (done_) return std::nullopt;
    auto out = SubexcedantSeq::from(current_);
    const int n = static_cast<int>(current_.size());
    int i = n - 1;
    for (; i >= 0; --i) {
        if (current_[static_cast<std::size_t>(i)] < i) {
            ++current_[static_cast<std::size_t>(i)];
            break;
        }
        current_[static_cast<std::size_t>(i)] = 0;
    }
    done_ = i < 0;
    return out;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
    check_enumeration_size(n, kHardLimit);
    if (rank >= factorial(n)) throw InvalidInput("rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        const std::uint64_t f = factorial(k - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation::from(std::move(out));
}

SubexcedantSeq unrank_subexcedant(int n, std::uint64_t rank) {
    check_enumeration_size(n, kHardLimit);
    if (rank >= factorial(n)) throw InvalidInput("rank out of range");
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        const auto radix = static_cast<std::uint64_t>(i + 1);
        out[static_cast<std::size_t>(i)] = static_cast<int>(rank % radix);
        rank /= radix;
    }
    return SubexcedantSeq::from(std::move(out));
}

std::uint64_t rank_subexcedant(const SubexcedantSeq& s) {
    std::uint64_t rank = 0;
    for (int i = 1; i <= s.size(); ++i) rank = rank * static_cast<std::uint64_t>(i) + static_cast<std::uint64_t>(s.at(i));
    return rank;
}

PairTable double_eulerian(int n, Side side, int jobs, int cap) {
    check_enumeration_size(n, cap);
    auto parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        PairTable t;
        t.n = n;
        if (side == Side::Perms) {
            visit_perms(n, begin, end, [&](const Permutation& p) {
                t.add({static_cast<int>(des_set(p.word()).size()), static_cast<int>(ides_set(p).size())});
            });
        } else {
            visit_seqs(n, begin, end, [&](const SubexcedantSeq& s) {
                t.add({static_cast<int>(asc_set(s.word()).size()), static_cast<int>(row_set(s).size())});
            });
        }
        return t;
    });
    PairTable out;
    out.n = n;
    for (const auto& p : parts) out.merge(p);
    return out;
}

TupleTable five_tuple_table(int n, Side side, int jobs, int cap) {
    check_enumeration_size(n, cap);
    auto parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        TupleTable t;
        t.n = n;
        if (side == Side::Perms) {
            visit_perms(n, begin, end, [&](const Permutation& p) { t.add(five_tuple_perm(p).key()); });
        } else {
            visit_seqs(n, begin, end, [&](const SubexcedantSeq& s) { t.add(five_tuple_seq(s).key()); });
        }
        return t;
    });
    TupleTable out;
    out.n = n;
    for (const auto& p : parts) out.merge(p);
    return out;
}

std::vector<std::vector<std::uint64_t>> dense_matrix(const PairTable& table) {
    const auto dim = static_cast<std::size_t>(std::max(table.n, 1));
    std::vector<std::vector<std::uint64_t>> m(dim, std::vector<std::uint64_t>(dim, 0));
    for (const auto& [key, count] : table.counts) {
        const auto d = static_cast<std::size_t>(key.first);
        const auto e = static_cast<std::size_t>(key.second);
        if (d >= dim || e >= dim) throw InternalError("table key outside the n x n range");
        m[d][e] = count;
    }
    return m;
}

std::string format_polynomial(const PairTable& table) {
    std::string out;
    for (const auto& [key, count] : table.counts) {
        if (count == 0) continue;
        if (!out.empty()) out += " + ";
        if (count != 1) out += std::to_string(count) + ' ';
        out += "u^" + std::to_string(key.first + 1) + " v^" + std::to_string(key.second + 1);
    }
    return out.empty() ? "0" : out;
}

Report verify_theorem2(int n, int jobs, int cap) {
    check_enumeration_size(n, cap);
    auto parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        Sweep sw;
        visit_perms(n, begin, end, [&](const Permutation& p) {
            ++sw.cases;
            const auto code = b_encode(p);
            const auto lhs = five_tuple_perm(p);
            const auto rhs = five_tuple_seq(code);
            if (lhs != rhs) {
                sw.fail("p=" + format_word(p.word()) + " b(p)=" + format_word(code.word()) + " : " +
                        tuple_line(lhs, kPermTupleNames) + " vs " + tuple_line(rhs, kSeqTupleNames));
            }
        });
        return sw;
    });
    Report r;
    r.n = n;
    r.check = "theorem2";
    const Sweep total = merge_sweeps(parts);
    r.cases = total.cases;
    r.details.push_back(detail_from("five-tuple transport", total));
    finish(r);
    return r;
}

Report verify_bijection(int n, int jobs, int cap) {
    check_enumeration_size(n, cap);
    const std::uint64_t total = factorial(n);
    std::vector<std::atomic<std::uint8_t>> hits(total);

    auto forward = run_blocks(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        std::pair<Sweep, Sweep> sw;  // (injectivity, decode after encode)
        visit_perms(n, begin, end, [&](const Permutation& p) {
            ++sw.first.cases;
            ++sw.second.cases;
            const auto code = b_encode(p);
            if (hits[rank_subexcedant(code)].fetch_add(1) != 0)
                sw.first.fail("code " + format_word(code.word()) + " reached twice, again by p=" + format_word(p.word()));
            const auto back = b_decode(code);
            if (back != p) {
                sw.second.fail("p=" + format_word(p.word()) + " b(p)=" + format_word(code.word()) +
                               " decodes to " + format_word(back.word()));
            }
        });
        return sw;
    });
    auto backward = run_blocks(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        Sweep sw;
        visit_seqs(n, begin, end, [&](const SubexcedantSeq& s) {
            ++sw.cases;
            const auto p = b_decode(s);
            const auto again = b_encode(p);
            if (again != s) {
                sw.fail("s=" + format_word(s.word()) + " decodes to " + format_word(p.word()) + " which encodes to " +
                        format_word(again.word()));
            }
        });
        return sw;
    });

    std::vector<Sweep> inj, dec;
    for (auto& part : forward) {
        inj.push_back(part.first);
        dec.push_back(part.second);
    }
    Sweep injective = merge_sweeps(inj);
    std::uint64_t missed = 0;
    for (const auto& h : hits)
        if (h.load() == 0) ++missed;
    if (missed) injective.fail(std::to_string(missed) + " sequences not in the image");

    Report r;
    r.n = n;
    r.check = "bijection";
    const Sweep decode_side = merge_sweeps(dec);
    const Sweep encode_side = merge_sweeps(backward);
    r.cases = injective.cases + encode_side.cases;
    r.details.push_back(detail_from("image distinct and complete", injective));
    r.details.push_back(detail_from("b_decode(b_encode(p)) = p", decode_side));
    r.details.push_back(detail_from("b_encode(b_decode(s)) = s", encode_side));
    finish(r);
    return r;
}

Report verify_corollary2(int n, int jobs, int cap) {
    check_enumeration_size(n, cap);
    using MaskTable = std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t>;
    using CountTable = std::map<std::pair<std::size_t, std::size_t>, std::int64_t>;
    struct Part {
        MaskTable sets;    // +1 for (Asc,Row) s, -1 for (Row,Asc) s
        CountTable counts;
        Sweep set_witness, count_witness;
    };
    auto parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        Part part;
        visit_seqs(n, begin, end, [&](const SubexcedantSeq& s) {
            const auto asc = asc_set(s.word());
            const auto row = row_set(s);
            part.sets[{mask_of(asc), mask_of(row)}] += 1;
            part.sets[{mask_of(row), mask_of(asc)}] -= 1;
            part.counts[{asc.size(), row.size()}] += 1;
            part.counts[{row.size(), asc.size()}] -= 1;

            const auto pi = b_decode(s);
            const auto t = b_encode(invert_perm(pi));
            const auto t_asc = asc_set(t.word());
            const auto t_row = row_set(t);
            ++part.set_witness.cases;
            ++part.count_witness.cases;
            const std::string where = "s=" + format_word(s.word()) + " t=" + format_word(t.word());
            if (asc != t_row || row != t_asc) {
                part.set_witness.fail(where + " : (Asc,Row) s=(" + asc.to_string() + "," + row.to_string() +
                                      ") (Row,Asc) t=(" + t_row.to_string() + "," + t_asc.to_string() + ")");
            }
            if (asc.size() != t_row.size() || row.size() != t_asc.size()) {
                part.count_witness.fail(where + " : (asc,row) s=(" + std::to_string(asc.size()) + "," +
                                        std::to_string(row.size()) + ") (row,asc) t=(" + std::to_string(t_row.size()) +
                                        "," + std::to_string(t_asc.size()) + ")");
            }
        });
        return part;
    });

    MaskTable sets;
    CountTable counts;
    std::vector<Sweep> sw_sets, sw_counts;
    for (const auto& p : parts) {
        for (const auto& [k, c] : p.sets) sets[k] += c;
        for (const auto& [k, c] : p.counts) counts[k] += c;
        sw_sets.push_back(p.set_witness);
        sw_counts.push_back(p.count_witness);
    }

    auto set_string = [](std::uint64_t m) {
        std::vector<int> pos;
        for (int b = 0; b < 64; ++b)
            if (m >> b & 1) pos.push_back(b);
        return PositionSet::from_sorted(std::move(pos)).to_string();
    };

    Sweep set_multiset;
    set_multiset.cases = factorial(n);
    for (const auto& [k, c] : sets) {
        if (c != 0) {
            set_multiset.fail("pair (" + set_string(k.first) + "," + set_string(k.second) + ") occurs " +
                              std::to_string(c > 0 ? c : -c) + " more time(s) as " +
                              (c > 0 ? "(Asc,Row)" : "(Row,Asc)"));
            break;
        }
    }
    Sweep count_multiset;
    count_multiset.cases = factorial(n);
    for (const auto& [k, c] : counts) {
        if (c != 0) {
            count_multiset.fail("pair (" + std::to_string(k.first) + "," + std::to_string(k.second) + ") unbalanced by " +
                                std::to_string(c));
            break;
        }
    }

    Report r;
    r.n = n;
    r.check = "corollary2";
    r.cases = factorial(n);
    r.details.push_back(detail_from("sets: (Asc,Row) ~ (Row,Asc) as multisets", set_multiset));
    r.details.push_back(detail_from("sets: (Asc,Row) s = (Row,Asc) t per element", merge_sweeps(sw_sets)));
    r.details.push_back(detail_from("counts: (asc,row) ~ (row,asc) as multisets", count_multiset));
    r.details.push_back(detail_from("counts: (asc,row) s = (row,asc) t per element", merge_sweeps(sw_counts)));
    finish(r);
    return r;
}

EulerianMarginals eulerian_marginals(int n, int jobs, int cap) {
    check_enumeration_size(n, cap);
    const auto dim = static_cast<std::size_t>(n);
    auto blank = [&] {
        EulerianMarginals m;
        for (auto* v : {&m.des, &m.ides, &m.asc, &m.row, &m.dumont}) v->assign(dim, 0);
        return m;
    };
    auto perm_parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        EulerianMarginals m = blank();
        visit_perms(n, begin, end, [&](const Permutation& p) {
            ++m.des[des_set(p.word()).size()];
            ++m.ides[ides_set(p).size()];
            ++m.dumont[static_cast<std::size_t>(dumont_stat(p))];
        });
        return m;
    });
    auto seq_parts = run_blocks(factorial(n), jobs, [&](std::uint64_t begin, std::uint64_t end) {
        EulerianMarginals m = blank();
        visit_seqs(n, begin, end, [&](const SubexcedantSeq& s) {
            ++m.asc[asc_set(s.word()).size()];
            ++m.row[row_set(s).size()];
        });
        return m;
    });
    EulerianMarginals out = blank();
    auto add = [&](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
        for (std::size_t k = 0; k < dim; ++k) into[k] += from[k];
    };
    for (const auto& m : perm_parts) {
        add(out.des, m.des);
        add(out.ides, m.ides);
        add(out.dumont, m.dumont);
    }
    for (const auto& m : seq_parts) {
        add(out.asc, m.asc);
        add(out.row, m.row);
    }
    return out;
}

Report eulerian_check(int n, int jobs, int cap) {
    const auto m = eulerian_marginals(n, jobs, cap);
    auto render = [](const std::vector<std::uint64_t>& v) {
        std::string out = "(";
        for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
        return out + ")";
    };
    Report r;
    r.n = n;
    r.check = "eulerian";
    r.cases = 2 * factorial(n);
    const std::pair<const char*, const std::vector<std::uint64_t>*> others[] = {
        {"ides", &m.ides}, {"asc", &m.asc}, {"row", &m.row}, {"dumont", &m.dumont}};
    for (const auto& [name, dist] : others) {
        CheckDetail d{std::string("des ~ ") + name, *dist == m.des, std::nullopt};
        if (!d.pass) d.counterexample = "des " + render(m.des) + " vs " + name + " " + render(*dist);
        r.details.push_back(std::move(d));
    }
    finish(r);
    return r;
}

}  // namespace permcode
