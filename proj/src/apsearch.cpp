#include "powerap/apsearch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "powerap/pell.hpp"
#include "powerap/powerful.hpp"

namespace powerap {

namespace {

int square_count_of(u64 n1, u64 n2, u64 n3) {
    int c = int(is_square(n1)) + int(is_square(n2)) + int(is_square(n3));
    if (c == 3) throw ThreeSquares("three consecutive squares cannot be in AP");
    return c;
}

}  // namespace

ApTriple make_ap_triple(u64 n, u64 d) {
    ApTriple t;
    t.n1 = n;
    t.n2 = n + d;
    t.n3 = n + 2 * d;
    t.d = d;
    t.square_count = square_count_of(t.n1, t.n2, t.n3);
    t.ratio = double(d) / std::sqrt(double(n));
    return t;
}

void save_checkpoint(const SearchCheckpoint& cp, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InvalidCheckpoint("cannot open checkpoint file for writing: " + tmp);
        out << "powerap-checkpoint\n";
        out << "version=1\n";
        out << "limit=" << cp.limit << "\n";
        out << "next_segment_start=" << cp.next_segment_start << "\n";
        out << "carry=";
        for (size_t i = 0; i < cp.carry.size(); ++i) out << (i ? " " : "") << cp.carry[i];
        out << "\n";
        out << "triples=" << cp.triples_found.size() << "\n";
        for (const ApTriple& t : cp.triples_found) out << t.n1 << " " << t.d << "\n";
        if (!out) throw InvalidCheckpoint("checkpoint write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InvalidCheckpoint("checkpoint rename failed: " + path);
}

SearchCheckpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidCheckpoint("cannot open checkpoint file: " + path);
    std::string line;
    auto expect_kv = [&](const std::string& key) -> std::string {
        if (!std::getline(in, line) || line.rfind(key + "=", 0) != 0)
            throw InvalidCheckpoint("checkpoint missing field: " + key);
        return line.substr(key.size() + 1);
    };
    if (!std::getline(in, line) || line != "powerap-checkpoint")
        throw InvalidCheckpoint("bad checkpoint magic");
    if (expect_kv("version") != "1") throw InvalidCheckpoint("unsupported checkpoint version");

    SearchCheckpoint cp;
    cp.limit = std::stoull(expect_kv("limit"));
    cp.next_segment_start = std::stoull(expect_kv("next_segment_start"));
    std::istringstream carry(expect_kv("carry"));
    u64 v;
    while (carry >> v) cp.carry.push_back(v);
    if (cp.carry.size() > 2 || !std::is_sorted(cp.carry.begin(), cp.carry.end()))
        throw InvalidCheckpoint("corrupted carry");
    size_t n = std::stoull(expect_kv("triples"));
    for (size_t i = 0; i < n; ++i) {
        u64 N, d;
        if (!(in >> N >> d)) throw InvalidCheckpoint("truncated triple list");
        cp.triples_found.push_back(make_ap_triple(N, d));
    }
    if (cp.next_segment_start > cp.limit + 1) throw InvalidCheckpoint("inconsistent segment start");
    return cp;
}

std::vector<ApTriple> search_consecutive_ap(u64 limit, const SearchOptions& opts) {
    if (limit < 3) throw std::domain_error("search_consecutive_ap: limit must be >= 3");

    u64 hi = limit + 1;  // third element <= limit, half-open stream
    SearchCheckpoint cp;
    cp.limit = limit;
    cp.next_segment_start = 1;
    if (opts.checkpoint_path) {
        std::ifstream probe(*opts.checkpoint_path);
        if (probe.good()) {
            cp = load_checkpoint(*opts.checkpoint_path);
            if (cp.limit != limit)
                throw InvalidCheckpoint("checkpoint limit does not match requested limit");
        }
    }
    if (cp.next_segment_start >= hi) return cp.triples_found;

    u64 seg = opts.segment_size;
    if (seg == 0) seg = std::max(min_segment_size(hi), hi / 1024 + 1);

    PowerfulStream stream({cp.next_segment_start, hi, seg});
    u64 nseg = stream.segment_count();
    unsigned threads = std::max(1u, opts.threads);

    std::vector<u64> window = cp.carry;  // last <= 2 values seen
    u64 processed = 0;
    bool stopped = false;

    for (u64 base = 0; base < nseg && !stopped; base += threads) {
        u64 chunk = std::min<u64>(threads, nseg - base);
        std::vector<std::future<std::vector<u64>>> futs;
        for (u64 i = 1; i < chunk; ++i)
            futs.push_back(std::async(std::launch::async,
                                      [&stream, base, i] { return stream.segment(base + i); }));
        for (u64 i = 0; i < chunk; ++i) {
            std::vector<u64> vals = i == 0 ? stream.segment(base) : futs[i - 1].get();
            for (u64 v : vals) {
                if (window.size() == 2 && window[1] - window[0] == v - window[1])
                    cp.triples_found.push_back(make_ap_triple(window[0], window[1] - window[0]));
                if (window.size() == 2) window.erase(window.begin());
                window.push_back(v);
            }
            ++processed;
            cp.next_segment_start = stream.segment_start(base + i + 1);
            cp.carry = window;
            if (opts.checkpoint_path && processed % opts.checkpoint_every == 0)
                save_checkpoint(cp, *opts.checkpoint_path);
            if (opts.stop_after_segments && processed >= *opts.stop_after_segments) {
                stopped = true;
                break;
            }
        }
    }
    if (opts.checkpoint_path) save_checkpoint(cp, *opts.checkpoint_path);
    return cp.triples_found;
}

int classify(const ApTriple& t) {
    if (t.n2 - t.n1 != t.d || t.n3 - t.n2 != t.d)
        throw std::domain_error("classify: not an arithmetic progression");
    return square_count_of(t.n1, t.n2, t.n3);
}

std::optional<u64> verify_A2_shape(const ApTriple& t) {
    if (classify(t) != 2) throw NotClassTwo("verify_A2_shape: triple is not class 2");
    u64 r1 = isqrt(t.n1), r2 = isqrt(t.n2);
    if (r1 * r1 != t.n1 || r2 * r2 != t.n2) return std::nullopt;
    if (r2 != r1 + 1) return std::nullopt;
    u64 x = r2 + 1;
    if (t.n3 != x * x - 2) return std::nullopt;
    return x;
}

PellApRecord verify_pell_triple(const mpz_class& x, const mpz_class& y) {
    if (x < 3 || y < 1 || x * x - 343 * y * y != 2)
        throw NotPellSolution("verify_pell_triple: x^2 - 343 y^2 != 2");
    PellApRecord rec;
    rec.x = x;
    rec.y = y;
    rec.n1 = (x - 2) * (x - 2);
    rec.n2 = (x - 1) * (x - 1);
    rec.n3 = x * x - 2;
    rec.d = 2 * x - 3;
    if (rec.n2 - rec.n1 != rec.d || rec.n3 - rec.n2 != rec.d)
        throw VerificationFailed("verify_pell_triple: terms are not in AP");
    // n1, n2 are squares; n3 = 343 y^2 = 7^3 y^2, powerful for any y >= 1.
    if (rec.n3 != 343 * y * y)
        throw VerificationFailed("verify_pell_triple: n3 is not 343 y^2");
    if (rec.d != 2 * isqrt(rec.n1) + 1)
        throw VerificationFailed("verify_pell_triple: d != 2 sqrt(N) + 1");
    return rec;
}

std::vector<std::pair<ApTriple, ApTriple>> find_doublings(const std::vector<ApTriple>& ts) {
    std::vector<std::pair<ApTriple, ApTriple>> out;
    for (const ApTriple& t : ts) {
        for (const ApTriple& u : ts) {
            if (u.n1 == 2 * t.n1 && u.d == 2 * t.d) out.emplace_back(t, u);
        }
    }
    return out;
}

}  // namespace powerap
