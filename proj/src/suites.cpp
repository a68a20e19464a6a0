#include "cubenori/suites.hpp"

#include "cubenori/errors.hpp"
#include "cubenori/quiver.hpp"
#include "cubenori/tensor.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace cubenori {

using nlohmann::json;

bool SuiteReport::ok() const
{
    return failure_count() == 0;
}

std::size_t SuiteReport::failure_count() const
{
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const InstanceVerdict& v) { return !v.passed; }));
}

std::size_t SuiteReport::skipped_count() const
{
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const InstanceVerdict& v) { return v.skipped; }));
}

json SuiteReport::to_json() const
{
    json items = json::array();
    for (const InstanceVerdict& v : instances) {
        json failed = json::array();
        for (const Check& c : v.report.checks())
            if (!c.passed)
                failed.push_back({{"check", c.name}, {"detail", c.detail}});
        json item = {{"key", v.key}, {"passed", v.passed}, {"checks", v.report.checks().size()}, {"failures", failed}};
        if (v.skipped)
            item["skipped"] = true;
        if (!v.note.empty())
            item["note"] = v.note;
        items.push_back(std::move(item));
    }
    return {{"suite", suite},
            {"ok", ok()},
            {"failure_count", failure_count()},
            {"skipped_count", skipped_count()},
            {"instances", items}};
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"les",     "excision", "mv",     "cellularity",
                                                   "axioms",  "kunneth",  "quiver", "logic"};
    return names;
}

namespace {

std::pair<int, int> window_for(const SuiteOptions& o, const CubicalComplex& x)
{
    return o.window ? *o.window : std::make_pair(-1, x.dimension() + 1);
}

/// Runs body into a fresh report; library errors become a failed check.
InstanceVerdict instance(const std::string& key, const std::function<void(Report&)>& body)
{
    InstanceVerdict v{key, true, false, {}, Report(key)};
    try {
        body(v.report);
    } catch (const SearchTooLarge&) {
        throw;
    } catch (const Error& e) {
        v.report.add("error", false, {{"what", e.what()}});
    }
    v.passed = v.report.ok();
    return v;
}

InstanceVerdict skipped(const std::string& key, const std::string& note)
{
    return InstanceVerdict{key, true, true, note, Report(key)};
}

void absorb(Report& into, const Report& from)
{
    for (const Check& c : from.checks())
        into.add(c.name, c.passed, c.detail);
}

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t product_size(const SubcomplexPair& p, const SubcomplexPair& q)
{
    return p.total().size() * q.total().size();
}

// ---------------------------------------------------------------------------

void les_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    for (const auto& [name, t] : c.triples)
        r.instances.push_back(instance("triple:" + name, [&](Report& rep) {
            const auto [lo, hi] = window_for(o, t.x());
            absorb(rep, check_les_of_triple(t, lo, hi));
        }));
}

void excision_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    std::vector<long> moduli = {2, 3};
    if (std::find(moduli.begin(), moduli.end(), o.modulus) == moduli.end())
        moduli.push_back(o.modulus);
    for (const auto& [name, cover] : c.covers)
        r.instances.push_back(instance("cover:" + name, [&](Report& rep) {
            const auto [lo, hi] = window_for(o, cover.x());
            for (int n = lo; n <= hi; ++n) {
                const GroupHom exc = excision_map(cover, n);
                const bool iso = exc.is_isomorphism();
                rep.add("iso n=" + std::to_string(n), iso,
                        iso ? json::object() : json{{"degree", n}, {"matrix", matrix_json(exc.matrix())}});
                for (const long m : moduli) {
                    const std::string tag = "Z/" + std::to_string(m) + " n=" + std::to_string(n);
                    const ExcisionVerdict v = excision_sequents(cover, n, m, false, o.search_limit);
                    rep.add("sequents " + tag, v.agrees() && v.injective == iso && v.surjective == iso,
                            {{"injective", v.injective}, {"surjective", v.surjective}});
                    const ExcisionVerdict bad = excision_sequents(cover, n, m, true, o.search_limit);
                    const bool target_trivial = excision_model(cover, n, m).carrier("piece").is_trivial();
                    rep.add("corrupted " + tag, bad.agrees() && (target_trivial || !bad.surjective),
                            {{"surjective", bad.surjective}});
                }
            }
        }));
}

void mv_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    for (const auto& [name, cover] : c.covers)
        r.instances.push_back(instance("cover:" + name, [&](Report& rep) {
            const auto [lo, hi] = window_for(o, cover.x());
            absorb(rep, mayer_vietoris_check(cover, lo, hi));
        }));
}

void cellularity_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    for (const auto& [name, x] : c.complexes)
        r.instances.push_back(instance("complex:" + name, [&](Report& rep) {
            std::vector<Filtration> candidates;
            for (const auto& [fname, f] : c.filtrations)
                if (f.space() == x)
                    candidates.push_back(f);
            std::vector<CellularMap> maps;
            for (const auto& [mname, m] : c.maps)
                if (m.map().source() == x)
                    maps.push_back({mname, m.map()});
            absorb(rep, check_cellularity(x, candidates, maps));

            const PairCohomology hx(SubcomplexPair::absolute(x));
            candidates.insert(candidates.begin(), skeleton_filtration(x));
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (!is_good(candidates[k]))
                    continue;
                const FiltrationComplex phi(candidates[k]);
                for (int n = 0; n <= x.dimension(); ++n)
                    rep.add("comparison " + std::to_string(k) + " n=" + std::to_string(n),
                            comparison_iso(phi, n, hx).is_isomorphism());
            }
        }));
    for (const auto& [name, p] : c.pairs)
        r.instances.push_back(instance("pair:" + name, [&](Report& rep) {
            const PairCohomology h(p);
            const CochainComplex fiber = mapping_fiber(restriction_map(p));
            const CochainComplex cellular =
                pair_filtration_complex(p, FiltrationComplex(skeleton_filtration(p.total())),
                                        FiltrationComplex(skeleton_filtration(p.sub())));
            const auto [lo, hi] = window_for(o, p.total());
            for (int n = lo; n <= hi; ++n) {
                const std::string d = std::to_string(n);
                rep.add("fiber n=" + d, cohomology_at(fiber, n).group().isomorphic_to(h.group(n)),
                        {{"relative", h.group(n).describe()}});
                rep.add("cellular fiber n=" + d, cohomology_at(cellular, n).group().isomorphic_to(h.group(n)));
            }
        }));
}

std::vector<std::pair<std::string, SubcomplexPair>> probe_pairs()
{
    return {{"pt", SubcomplexPair::absolute(shapes::point())},
            {"I", SubcomplexPair(shapes::interval(), shapes::interval_boundary())},
            {"dI", SubcomplexPair::absolute(shapes::interval_boundary())}};
}

void axioms_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    // pairs small enough that all triple products stay near the size cap
    std::vector<SubcomplexPair> small;
    std::vector<std::string> small_names;
    for (const auto& [name, p] : c.pairs)
        if (p.total().size() * p.total().size() <= o.max_product_cubes) {
            small.push_back(p);
            small_names.push_back(name);
        }
    std::vector<PairMap> maps;
    for (const auto& [name, m] : c.maps)
        if (std::find(small.begin(), small.end(), m.source()) != small.end() &&
            std::find(small.begin(), small.end(), m.target()) != small.end())
            maps.push_back(m);
    r.instances.push_back(instance("ax0_ax1", [&](Report& rep) { absorb(rep, check_ax0_ax1(small, maps)); }));

    std::vector<SubcomplexPair> unit_pairs;
    for (const auto& [name, p] : c.pairs)
        if (p.total().size() <= o.max_product_cubes)
            unit_pairs.push_back(p);
    r.instances.push_back(instance("ax4", [&](Report& rep) { absorb(rep, check_ax4(unit_pairs)); }));

    for (const auto& [name, t] : c.triples)
        for (const auto& [qname, q] : probe_pairs()) {
            if (t.x().size() * q.total().size() > o.max_product_cubes) {
                r.instances.push_back(skipped("ax2_ax3:" + name + ":" + qname, "product too large"));
                continue;
            }
            r.instances.push_back(instance("ax2_ax3:" + name + ":" + qname, [&](Report& rep) {
                for (int n = 0; n <= t.x().dimension(); ++n)
                    for (int m = 0; m <= q.total().dimension(); ++m) {
                        const std::string tag = " n=" + std::to_string(n) + ",m=" + std::to_string(m);
                        const Report ax2 = check_ax2(t, q, n, m);
                        for (const Check& k : ax2.checks())
                            rep.add("ax2" + tag + " " + k.name, k.passed, k.detail);
                        const Report ax3 = check_ax3(q, t, m, n);
                        for (const Check& k : ax3.checks())
                            rep.add("ax3" + tag + " " + k.name, k.passed, k.detail);
                    }
            }));
        }
}

void kunneth_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    std::vector<std::string> good;
    for (const auto& [name, p] : c.pairs) {
        const GoodPairVerdict v = certify_good_pair(p);
        if (v.good())
            good.push_back(name);
        else
            r.instances.push_back(skipped("pair:" + name, "not good: " + v.refusal));
    }
    for (std::size_t a = 0; a < good.size(); ++a)
        for (std::size_t b = a; b < good.size(); ++b) {
            const SubcomplexPair& p = c.pairs.at(good[a]);
            const SubcomplexPair& q = c.pairs.at(good[b]);
            const std::string key = "product:" + good[a] + "*" + good[b];
            if (product_size(p, q) > o.max_product_cubes) {
                r.instances.push_back(skipped(key, "product too large"));
                continue;
            }
            r.instances.push_back(instance(key, [&](Report& rep) { absorb(rep, check_kunneth(p, q)); }));
        }
}

/// Pairs whose products up to total degree 3 fit the closure cap.
bool quiver_admissible(const SubcomplexPair& p)
{
    if (p == SubcomplexPair::absolute(shapes::point()))
        return true;
    const GoodPairVerdict v = certify_good_pair(p);
    if (!v.good())
        return false;
    const auto& cert = *v.certificate;
    if (cert.group.is_trivial())
        return true;
    if (cert.degree == 0)
        return false;
    std::size_t size = 1;
    for (int k = 0; k < 3 / cert.degree; ++k)
        size *= p.total().size();
    return size <= 1000;
}

void quiver_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    const int lo = o.window ? o.window->first : 0;
    const int hi = o.window ? o.window->second : 3;
    r.instances.push_back(instance("quiver", [&](Report& rep) {
        QuiverCorpus q;
        q.add_pair("pt", SubcomplexPair::absolute(shapes::point()));
        std::vector<std::string> left_out;
        for (const auto& [name, p] : c.pairs) {
            if (quiver_admissible(p))
                q.add_pair(name, p);
            else
                left_out.push_back(name);
        }
        for (const auto& [name, m] : c.maps)
            if (quiver_admissible(m.source()) && quiver_admissible(m.target()))
                q.add_map(name, m);
        for (const auto& [name, t] : c.triples)
            if (quiver_admissible(t.outer()) && quiver_admissible(t.inner()))
                q.add_triple(name, t);
        close_under_products(q, hi);
        const GradedTensorQuiver g = good_subquiver(build_fragment(q, lo, hi), certify_corpus(q));
        absorb(rep, check_tensor_representation(represent(g)));
        rep.add("pairs " + std::to_string(q.pair_count()) + ", vertices " + std::to_string(g.vertices().size()) +
                    ", edges " + std::to_string(g.edges().size()),
                true, {{"left_out", left_out}});
    }));
}

void logic_suite(SuiteReport& r, const Corpus& c, const SuiteOptions& o)
{
    const Integer m(o.modulus);
    auto guarded = [&](const std::string& key, const std::function<void(Report&)>& body) {
        try {
            r.instances.push_back(instance(key, body));
        } catch (const SearchTooLarge& e) {
            r.instances.push_back(skipped(key, e.what()));
        }
    };
    for (const auto& [name, t] : c.triples)
        guarded("triple:" + name, [&](Report& rep) {
            const auto [lo, hi] = window_for(o, t.x());
            for (const ExactnessInstance& e : les_instances(t, m, lo, hi)) {
                const bool algebra = compose(e.f, e.g).is_zero() && is_exact_at(e.f, e.g);
                rep.add(e.label, exactness_sequents(e.f, e.g, o.search_limit) == algebra && algebra);
                const ExactnessInstance bad = corrupt(e);
                const bool bad_algebra = is_exact_at(bad.f, bad.g);
                rep.add(bad.label, exactness_sequents(bad.f, bad.g, o.search_limit) == bad_algebra,
                        {{"exact", bad_algebra}});
            }
        });
    for (const auto& [name, cover] : c.covers)
        guarded("cover:" + name, [&](Report& rep) {
            const auto [lo, hi] = window_for(o, cover.x());
            for (int n = lo; n <= hi; ++n) {
                const ExcisionVerdict v = excision_sequents(cover, n, m, false, o.search_limit);
                rep.add("excision n=" + std::to_string(n), v.agrees() && v.injective && v.surjective);
            }
        });
    for (const auto& [a, p] : c.pairs)
        for (const auto& [b, q] : c.pairs) {
            if (a > b || product_size(p, q) > o.max_product_cubes / 4)
                continue;
            guarded("kunneth:" + a + "*" + b, [&](Report& rep) {
                for (int n = 0; n <= p.total().dimension() + q.total().dimension(); ++n) {
                    const KunnethVerdict v = strong_kunneth_sequent(p, q, n, m, o.search_limit);
                    rep.add("n=" + std::to_string(n), v.agrees(), {{"surjective", v.sequent}});
                }
            });
        }
    for (const auto& [name, s] : c.sequent_files)
        guarded("sequents:" + name, [&](Report& rep) {
            const SequentFile file = parse_sequent_file(s.text);
            const std::vector<bool> verdicts = evaluate_file(file, c.sequent_model(name, m), o.search_limit);
            for (std::size_t i = 0; i < verdicts.size(); ++i)
                rep.add(file.sequents[i], verdicts[i]);
        });
}

} // namespace

SuiteReport run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& options)
{
    static const std::map<std::string, void (*)(SuiteReport&, const Corpus&, const SuiteOptions&)> table = {
        {"les", les_suite},         {"excision", excision_suite}, {"mv", mv_suite},
        {"cellularity", cellularity_suite}, {"axioms", axioms_suite}, {"kunneth", kunneth_suite},
        {"quiver", quiver_suite},   {"logic", logic_suite}};
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown suite " + name);
    SuiteReport r{name, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    it->second(r, corpus, options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::sort(r.instances.begin(), r.instances.end(),
              [](const InstanceVerdict& a, const InstanceVerdict& b) { return a.key < b.key; });
    return r;
}

std::vector<SuiteReport> run_suites(const std::string& selector, const Corpus& corpus, const SuiteOptions& options)
{
    std::vector<SuiteReport> out;
    if (selector == "all") {
        for (const std::string& s : suite_names())
            out.push_back(run_suite(s, corpus, options));
    } else {
        out.push_back(run_suite(selector, corpus, options));
    }
    return out;
}

json reports_to_json(const std::vector<SuiteReport>& reports)
{
    json suites = json::array();
    bool ok = true;
    for (const SuiteReport& r : reports) {
        suites.push_back(r.to_json());
        ok = ok && r.ok();
    }
    return {{"schema", report_schema}, {"version", report_version}, {"ok", ok}, {"suites", suites}};
}

std::string human_summary(const std::vector<SuiteReport>& reports)
{
    std::ostringstream os;
    for (const SuiteReport& r : reports) {
        os << std::left << std::setw(12) << r.suite << (r.ok() ? "ok    " : "FAILED") << "  " << r.instances.size()
           << " instances, " << r.failure_count() << " failed, " << r.skipped_count() << " skipped  ("
           << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        for (const InstanceVerdict& v : r.instances)
            if (!v.passed) {
                os << "    " << v.key << ':';
                for (const std::string& f : v.report.failures())
                    os << ' ' << f << ';';
                os << '\n';
            }
    }
    return os.str();
}

} // namespace cubenori
