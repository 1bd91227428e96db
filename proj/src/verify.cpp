#include "ufna/verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ufna/hilbert.hpp"
#include "ufna/morphism.hpp"
#include "ufna/quiver.hpp"
#include "ufna/rng.hpp"

namespace ufna {

namespace {

using json = nlohmann::ordered_json;

json word_list(const Presentation& p, const std::vector<Word>& words) {
    json out = json::array();
    for (const Word& w : words) out.push_back(word_string(p, w));
    return out;
}

json relations_as_names(const Presentation& p) {
    json out = json::array();
    for (const Word& r : p.relations) {
        json rel = json::array();
        for (std::int32_t l : r.letters) rel.push_back(p.generators[l]);
        out.push_back(std::move(rel));
    }
    return out;
}

json presentation_echo(const Presentation& p) {
    json out;
    out["generators"] = p.generators;
    out["relations"] = relations_as_names(p);
    out["d"] = p.d;
    return out;
}

json poly_coeffs(const IntPoly& poly) {
    json out = json::array();
    for (const Int& c : poly.coeff) out.push_back(c.get_str());
    return out;
}

json certificate_json(const Presentation& p, const FdimCertificate& cert,
                      const std::vector<Word>& ker_basis) {
    json out;
    out["kind"] = cert.kind == FdimCertificate::Kind::Kernel ? "kernel" : "cokernel";
    out["n"] = cert.degree;
    out["m_max"] = cert.m_max;
    out["status"] = cert.status == FdimCertificate::Status::Certified ? "Certified"
                                                                      : "NotFoundWithinCap";
    if (cert.status == FdimCertificate::Status::Certified) out["m"] = cert.m;
    out["holds_at"] = cert.holds_at;
    if (cert.kind == FdimCertificate::Kind::Kernel)
        out["kernel_words"] = word_list(p, ker_basis);
    return out;
}

// extension-route slice columns against the label-route view; sparse
// counterpart of comparing fbar_slice with fbar_slice_by_extension
bool slice_characterizations_agree(MorphismCache& cache, int n) {
    const SliceView& s = cache.slice(n);
    const Quiver& q = cache.quiver();
    std::vector<int> seen(s.cols.size(), 0);
    for (std::size_t c = 0; c < s.cols.size(); ++c) {
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            const Word extended = concat(s.cols[c], q.vertices[v]);
            if (!is_normal(extended, cache.presentation())) continue;
            const int r = s.rows.row_of_word(extended);
            if (r < 0 || s.col_of_row[r] != static_cast<int>(c)) return false;
            seen[c] += 1;
        }
    }
    // both routes must give the same column supports
    for (std::size_t c = 0; c < s.cols.size(); ++c)
        if (seen[c] != s.group_count[c]) return false;
    return true;
}

Word random_word(SplitMix64& rng, int generators, int max_len) {
    Word w;
    if (generators == 0) return w;
    const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    for (int i = 0; i < len; ++i)
        w.letters.push_back(static_cast<std::int32_t>(rng.below(generators)));
    return w;
}

Path random_path(SplitMix64& rng, const Quiver& q, int max_len) {
    Path p;
    p.source = static_cast<int>(rng.below(q.vertices.size()));
    const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    int at = p.source;
    for (int i = 0; i < len; ++i) {
        const auto& outs = q.out_arrows[at];
        if (outs.empty()) break;
        const int ai = outs[rng.below(outs.size())];
        p.arrows.push_back(ai);
        at = q.arrows[ai].target;
    }
    return p;
}

} // namespace

VerifyResult run_verify(const Presentation& input, const VerifyOptions& opts) {
    const int N = opts.max_degree;
    const int m_max = opts.m_max >= 0 ? opts.m_max : N;
    const Presentation p = normalize(input);

    json report;
    report["schema"] = 1;
    report["tool"] = "ufna";
    report["command"] = "verify";
    json params;
    params["max_degree"] = N;
    params["m_max"] = m_max;
    params["seed"] = std::to_string(opts.seed);
    params["cap"] = std::to_string(opts.cap);
    report["params"] = std::move(params);

    report["input"] = presentation_echo(input);
    report["normalized"] = presentation_echo(p);
    report["collapsed_to_scalars"] = collapsed_to_scalars(p);

    const Quiver q = build_quiver(p, opts.cap);
    json quiver_summary;
    quiver_summary["vertices"] = q.vertices.size();
    quiver_summary["arrows"] = q.arrows.size();
    quiver_summary["d"] = q.d;
    report["quiver"] = std::move(quiver_summary);

    MorphismCache cache(q, p, opts.cap);
    bool verdict = true;
    json checks;

    // label separation, both forms
    {
        const LabelCheck direct = check_label_property(q);
        const LabelCheck dual = check_label_property_dual(q);
        json jc;
        jc["ok"] = direct.ok;
        jc["violations"] = json::array();
        for (const auto& v : direct.violations) {
            json vio;
            vio["vertex"] = word_string(p, q.vertices[v.vertex]);
            vio["label"] = p.generators[v.label];
            jc["violations"].push_back(std::move(vio));
        }
        jc["dual_ok"] = dual.ok;
        checks["label_lemma"] = std::move(jc);
        verdict = verdict && direct.ok && dual.ok;
    }

    // path/word bijection through degree N
    {
        bool all_ok = true;
        json rows = json::array();
        for (int n = 0; n <= N; ++n) {
            const Int paths = count_paths(q, n);
            const Int words = count_normal_words(n + q.d, p, opts.cap);
            const bool ok = paths == words;
            all_ok = all_ok && ok;
            json row;
            row["n"] = n;
            row["paths"] = paths.get_str();
            row["normal_words"] = words.get_str();
            row["ok"] = ok;
            rows.push_back(std::move(row));
        }
        json jc;
        jc["ok"] = all_ok;
        jc["rows"] = std::move(rows);
        checks["path_word_bijection"] = std::move(jc);
        verdict = verdict && all_ok;
    }

    // per-degree slice table: dimensions, rank, kernel, cokernel, span,
    // agreement of the two slice characterizations
    std::vector<KerCoker> degree_data;
    {
        bool span_all = true, agree_all = true;
        json rows = json::array();
        for (int n = 0; n <= N; ++n) {
            const KerCoker kc = ker_coker_dims(cache, n);
            const bool span_ok = check_degree_span(cache, n);
            const bool agree = slice_characterizations_agree(cache, n);
            span_all = span_all && span_ok;
            agree_all = agree_all && agree;
            json row;
            row["n"] = n;
            row["dim_A"] = std::to_string(cache.slice(n).cols.size());
            row["dim_kQ"] = std::to_string(cache.slice(n).rows.paths.size());
            row["rank"] = kc.rank;
            row["ker"] = kc.ker_dim;
            row["coker"] = kc.coker_dim;
            row["span_ok"] = span_ok;
            row["slice_characterizations_agree"] = agree;
            row["ker_basis"] = word_list(p, kc.ker_basis);
            rows.push_back(std::move(row));
            degree_data.push_back(kc);
        }
        json jc;
        jc["span_ok"] = span_all;
        jc["characterizations_ok"] = agree_all;
        jc["rows"] = std::move(rows);
        checks["degree_slices"] = std::move(jc);
        verdict = verdict && span_all && agree_all;
    }

    // homomorphism property on seeded random word pairs
    {
        SplitMix64 rng(opts.seed);
        const int max_len = std::min(4, std::max(N, 0));
        int failures = 0;
        int zero_checked = 0;
        for (int s = 0; s < opts.mult_samples; ++s) {
            const Word u = random_word(rng, p.generator_count(), max_len);
            const Word v = random_word(rng, p.generator_count(), max_len);
            const Word uv = concat(u, v);
            const PathBasis& bu = cache.slice(u.length()).rows;
            const PathBasis& bv = cache.slice(v.length()).rows;
            const PathBasis& buv = cache.slice(uv.length()).rows;
            const std::vector<Int> lhs = fbar_word(uv, q, opts.cap);
            const std::vector<Int> rhs =
                compose_vectors(q, bu, fbar_word(u, q, opts.cap), bv, fbar_word(v, q, opts.cap), buv);
            if (lhs != rhs) ++failures;
            if (!is_normal(uv, p)) {
                ++zero_checked;
                const bool zero = std::all_of(lhs.begin(), lhs.end(),
                                              [](const Int& x) { return x == 0; });
                if (!zero) ++failures;
            }
        }
        json jc;
        jc["samples"] = opts.mult_samples;
        jc["non_normal_products_checked"] = zero_checked;
        jc["failures"] = failures;
        jc["ok"] = failures == 0;
        checks["homomorphism_property"] = std::move(jc);
        verdict = verdict && failures == 0;
    }

    // torsion certificates
    {
        bool all_certified = true;
        json kernel = json::array(), cokernel = json::array();
        for (int n = 0; n <= N; ++n) {
            const FdimCertificate kc = kernel_fdim_certificate(cache, n, m_max);
            const FdimCertificate cc = cokernel_fdim_certificate(cache, n, m_max);
            all_certified = all_certified &&
                            kc.status == FdimCertificate::Status::Certified &&
                            cc.status == FdimCertificate::Status::Certified;
            kernel.push_back(certificate_json(p, kc, degree_data[n].ker_basis));
            cokernel.push_back(certificate_json(p, cc, {}));
        }
        json jc;
        jc["ok"] = all_certified;
        jc["kernel"] = std::move(kernel);
        jc["cokernel"] = std::move(cokernel);
        checks["fdim_certificates"] = std::move(jc);
        verdict = verdict && all_certified;
    }

    // cyclic probes: every trivial path plus seeded random paths
    {
        SplitMix64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        int probes = 0, disagreements = 0;
        json bad = json::array();
        auto run_probe = [&](const Path& path) {
            const CyclicProbe probe = classify_cyclic(path, N, q);
            ++probes;
            if (!probe.agree()) {
                ++disagreements;
                json b;
                b["path_word"] = word_string(p, path_word(q, path));
                b["finite_over_kQ"] = probe.finite_over_kq;
                b["finite_over_A"] = probe.finite_over_a;
                bad.push_back(std::move(b));
            }
        };
        for (std::size_t v = 0; v < q.vertices.size(); ++v) run_probe(Path{static_cast<int>(v), {}});
        if (!q.vertices.empty())
            for (int s = 0; s < opts.cyclic_samples; ++s)
                run_probe(random_path(rng, q, std::min(N, 6)));
        json jc;
        jc["probes"] = probes;
        jc["disagreements"] = disagreements;
        jc["ok"] = disagreements == 0;
        jc["mismatches"] = std::move(bad);
        checks["cyclic_probes"] = std::move(jc);
        verdict = verdict && disagreements == 0;
    }

    // Hilbert series and expansion cross-check
    {
        const RationalSeries ha = hilbert_algebra(p, q, opts.cap);
        const RationalSeries hq = hilbert_quiver(q);
        const std::vector<Int> expansion = expand(ha, N);
        const std::vector<Int> qexpansion = expand(hq, N);
        bool cross_ok = true;
        for (int n = 0; n <= N; ++n) {
            if (expansion[n] != count_normal_words(n, p, opts.cap)) cross_ok = false;
            if (qexpansion[n] != count_paths(q, n)) cross_ok = false;
        }
        const GrowthClass growth = growth_class(q);

        json jh;
        jh["algebra"] = {{"numerator", poly_coeffs(ha.num)}, {"denominator", poly_coeffs(ha.den)}};
        jh["quiver"] = {{"numerator", poly_coeffs(hq.num)}, {"denominator", poly_coeffs(hq.den)}};
        json exps = json::array();
        for (const Int& c : expansion) exps.push_back(c.get_str());
        jh["algebra_expansion"] = std::move(exps);
        jh["cross_check_ok"] = cross_ok;
        checks["hilbert"] = std::move(jh);
        verdict = verdict && cross_ok;

        json jg;
        jg["class"] = growth_string(growth);
        // informational: short windows make this heuristic, so it does
        // not gate the verdict
        jg["coefficient_window_consistent"] =
            growth_consistent(growth, expansion, std::max(0, N - 6));
        report["growth"] = std::move(jg);
    }

    report["checks"] = std::move(checks);
    report["verdict"] = verdict ? "pass" : "fail";

    VerifyResult out;
    out.report = std::move(report);
    out.pass = verdict;
    return out;
}

std::string report_text(const nlohmann::ordered_json& report) {
    return report.dump(2) + "\n";
}

} // namespace ufna
