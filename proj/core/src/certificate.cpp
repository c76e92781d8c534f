#include "hwp/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hwp/errors.hpp"

namespace hwp {

namespace {

using nlohmann::json;

void check_vertex_range(const Vertex& u, const Params& p) {
    if (u.a < 0 || u.a >= p.M || u.b < 0 || u.b >= p.ell)
        throw SchemaError("vertex (" + std::to_string(u.a) + "," + std::to_string(u.b) +
                          ") out of range for M = " + std::to_string(p.M) +
                          ", ell = " + std::to_string(p.ell));
}

std::vector<LiftedCycle> canonicalize_list(std::vector<LiftedCycle> cycles) {
    for (LiftedCycle& c : cycles) c = canonical_form(c);
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

json cycles_to_json(const std::vector<LiftedCycle>& cycles) {
    json arr = json::array();
    for (const LiftedCycle& c : cycles) {
        json jc = json::array();
        for (const Vertex& u : c) jc.push_back(json::array({u.a, u.b}));
        arr.push_back(std::move(jc));
    }
    return arr;
}

std::vector<LiftedCycle> cycles_from_json(const json& arr, const Params& p) {
    if (!arr.is_array()) throw SchemaError("cycle list must be an array");
    std::vector<LiftedCycle> out;
    for (const json& jc : arr) {
        if (!jc.is_array() || jc.size() < 3) throw SchemaError("cycle must list >= 3 vertices");
        LiftedCycle c;
        for (const json& ju : jc) {
            if (!ju.is_array() || ju.size() != 2 || !ju[0].is_number_integer() ||
                !ju[1].is_number_integer())
                throw SchemaError("vertex must be an [a, b] integer pair");
            Vertex u{ju[0].get<int>(), ju[1].get<int>()};
            check_vertex_range(u, p);
            c.push_back(u);
        }
        out.push_back(std::move(c));
    }
    return out;
}

json map_to_json(const std::map<int, int>& m) {
    json obj = json::object();
    for (auto [k, v] : m) obj[std::to_string(k)] = v;
    return obj;
}

std::map<int, int> map_from_json(const json& obj) {
    if (!obj.is_object()) throw SchemaError("sign-map table must be an object");
    std::map<int, int> out;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!it.value().is_number_integer()) throw SchemaError("sign-map value must be integer");
        out[std::stoi(it.key())] = it.value().get<int>();
    }
    return out;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok)
            throw SchemaError("unknown field '" + it.key() + "' in " + where);
    }
}

std::string serialize_json(const Certificate& cert) {
    json j;
    j["schema_version"] = cert.schema_version;
    j["params"] = {{"ell", cert.params.ell}, {"n", cert.params.n},   {"M", cert.params.M},
                   {"v", cert.params.v},     {"r", cert.params.r},   {"r_prime", cert.params.r_prime}};
    j["short_base_cycles"] = cycles_to_json(cert.short_base_cycles);
    j["long_base_cycles"] = cycles_to_json(cert.long_base_cycles);
    if (cert.maps) {
        j["maps"] = {{"f", map_to_json(cert.maps->f)},
                     {"phi", map_to_json(cert.maps->phi)},
                     {"F", map_to_json(cert.maps->F)},
                     {"G", map_to_json(cert.maps->G)}};
    }
    if (cert.verification) {
        j["verification"] = {{"level", cert.verification->level},
                             {"ok", cert.verification->ok},
                             {"checked_differences", cert.verification->checked_differences},
                             {"checked_edges", cert.verification->checked_edges}};
    }
    return j.dump(1) + "\n";
}

void write_cycles_text(std::ostringstream& os, const char* tag,
                       const std::vector<LiftedCycle>& cycles) {
    os << tag << ' ' << cycles.size() << '\n';
    for (const LiftedCycle& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i].a << ',' << c[i].b;
        }
        os << '\n';
    }
}

std::string serialize_text(const Certificate& cert) {
    std::ostringstream os;
    os << "hwp-certificate " << cert.schema_version << '\n';
    os << "params ell=" << cert.params.ell << " n=" << cert.params.n << " M=" << cert.params.M
       << " v=" << cert.params.v << " r=" << cert.params.r
       << " r_prime=" << cert.params.r_prime << '\n';
    write_cycles_text(os, "short", cert.short_base_cycles);
    write_cycles_text(os, "long", cert.long_base_cycles);
    if (cert.maps) {
        auto dump_map = [&](const char* name, const std::map<int, int>& m) {
            os << "map " << name;
            for (auto [k, v] : m) os << ' ' << k << ':' << v;
            os << '\n';
        };
        dump_map("f", cert.maps->f);
        dump_map("phi", cert.maps->phi);
        dump_map("F", cert.maps->F);
        dump_map("G", cert.maps->G);
    }
    if (cert.verification) {
        os << "verification level=" << cert.verification->level
           << " ok=" << (cert.verification->ok ? 1 : 0)
           << " checked_differences=" << cert.verification->checked_differences
           << " checked_edges=" << cert.verification->checked_edges << '\n';
    }
    return os.str();
}

Certificate deserialize_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.is_object()) throw SchemaError("certificate must be a JSON object");
    reject_unknown_keys(j, {"schema_version", "params", "short_base_cycles",
                            "long_base_cycles", "maps", "verification"},
                        "certificate");
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw SchemaError("missing schema_version");
    Certificate cert;
    cert.schema_version = j["schema_version"].get<std::string>();
    if (cert.schema_version != kCertificateSchemaVersion)
        throw SchemaError("unsupported schema version '" + cert.schema_version + "'");

    if (!j.contains("params") || !j["params"].is_object())
        throw SchemaError("missing params");
    const json& jp = j["params"];
    reject_unknown_keys(jp, {"ell", "n", "M", "v", "r", "r_prime"}, "params");
    for (const char* key : {"ell", "n", "M", "v", "r", "r_prime"})
        if (!jp.contains(key) || !jp[key].is_number_integer())
            throw SchemaError(std::string("params.") + key + " must be an integer");
    cert.params = make_params(jp["ell"].get<int>(), jp["n"].get<int>());
    if (jp["M"].get<int>() != cert.params.M || jp["v"].get<int>() != cert.params.v ||
        jp["r"].get<int>() != cert.params.r || jp["r_prime"].get<int>() != cert.params.r_prime)
        throw SchemaError("derived parameters disagree with (ell, n)");

    if (!j.contains("short_base_cycles") || !j.contains("long_base_cycles"))
        throw SchemaError("missing base cycle lists");
    cert.short_base_cycles = cycles_from_json(j["short_base_cycles"], cert.params);
    cert.long_base_cycles = cycles_from_json(j["long_base_cycles"], cert.params);

    if (j.contains("maps")) {
        const json& jm = j["maps"];
        reject_unknown_keys(jm, {"f", "phi", "F", "G"}, "maps");
        CertificateMaps maps;
        if (jm.contains("f")) maps.f = map_from_json(jm["f"]);
        if (jm.contains("phi")) maps.phi = map_from_json(jm["phi"]);
        if (jm.contains("F")) maps.F = map_from_json(jm["F"]);
        if (jm.contains("G")) maps.G = map_from_json(jm["G"]);
        cert.maps = std::move(maps);
    }
    if (j.contains("verification")) {
        const json& jv = j["verification"];
        reject_unknown_keys(jv, {"level", "ok", "checked_differences", "checked_edges"},
                            "verification");
        VerificationSummary vs;
        vs.level = jv.value("level", "");
        vs.ok = jv.value("ok", false);
        vs.checked_differences = jv.value("checked_differences", 0LL);
        vs.checked_edges = jv.value("checked_edges", 0LL);
        cert.verification = vs;
    }
    return cert;
}

Certificate deserialize_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, lineno); };

    if (!std::getline(is, line)) fail("empty input");
    ++lineno;
    {
        std::istringstream ls(line);
        std::string tag, version;
        ls >> tag >> version;
        if (tag != "hwp-certificate") fail("expected 'hwp-certificate' header");
        if (version != kCertificateSchemaVersion)
            throw SchemaError("unsupported schema version '" + version + "'");
    }

    Certificate cert;
    auto parse_kv = [&](const std::string& token, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (token.rfind(prefix, 0) != 0) fail("expected " + prefix + "...");
        return std::stoi(token.substr(prefix.size()));
    };
    if (!std::getline(is, line)) fail("missing params line");
    ++lineno;
    {
        std::istringstream ls(line);
        std::string tag, t1, t2, t3, t4, t5, t6;
        ls >> tag >> t1 >> t2 >> t3 >> t4 >> t5 >> t6;
        if (tag != "params") fail("expected params line");
        int ell = parse_kv(t1, "ell"), n = parse_kv(t2, "n");
        cert.params = make_params(ell, n);
        if (parse_kv(t3, "M") != cert.params.M || parse_kv(t4, "v") != cert.params.v ||
            parse_kv(t5, "r") != cert.params.r || parse_kv(t6, "r_prime") != cert.params.r_prime)
            throw SchemaError("derived parameters disagree with (ell, n)");
    }

    auto read_cycles = [&](const char* tag) {
        if (!std::getline(is, line)) fail(std::string("missing ") + tag + " header");
        ++lineno;
        std::istringstream ls(line);
        std::string got;
        long long count = -1;
        ls >> got >> count;
        if (got != tag || count < 0) fail(std::string("expected '") + tag + " <count>'");
        std::vector<LiftedCycle> cycles;
        for (long long i = 0; i < count; ++i) {
            if (!std::getline(is, line)) fail("unexpected end of cycle list");
            ++lineno;
            std::istringstream cs(line);
            LiftedCycle c;
            std::string tok;
            while (cs >> tok) {
                auto comma = tok.find(',');
                if (comma == std::string::npos) fail("vertex must be a,b");
                Vertex u;
                try {
                    u.a = std::stoi(tok.substr(0, comma));
                    u.b = std::stoi(tok.substr(comma + 1));
                } catch (const std::exception&) {
                    fail("bad vertex '" + tok + "'");
                }
                check_vertex_range(u, cert.params);
                c.push_back(u);
            }
            if (c.size() < 3) fail("cycle must list >= 3 vertices");
            cycles.push_back(std::move(c));
        }
        return cycles;
    };
    cert.short_base_cycles = read_cycles("short");
    cert.long_base_cycles = read_cycles("long");

    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "map") {
            std::string name;
            ls >> name;
            if (!cert.maps) cert.maps = CertificateMaps{};
            std::map<int, int>* m = nullptr;
            if (name == "f") m = &cert.maps->f;
            else if (name == "phi") m = &cert.maps->phi;
            else if (name == "F") m = &cert.maps->F;
            else if (name == "G") m = &cert.maps->G;
            else throw SchemaError("unknown map '" + name + "'");
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) fail("map entry must be k:v");
                (*m)[std::stoi(tok.substr(0, colon))] = std::stoi(tok.substr(colon + 1));
            }
        } else if (tag == "verification") {
            VerificationSummary vs;
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) fail("verification entry must be k=v");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "level") vs.level = val;
                else if (key == "ok") vs.ok = val == "1";
                else if (key == "checked_differences") vs.checked_differences = std::stoll(val);
                else if (key == "checked_edges") vs.checked_edges = std::stoll(val);
                else throw SchemaError("unknown verification field '" + key + "'");
            }
            cert.verification = vs;
        } else {
            throw SchemaError("unknown section '" + tag + "'");
        }
    }
    return cert;
}

}  // namespace

bool Certificate::operator==(const Certificate& o) const {
    auto maps_eq = [&] {
        if (maps.has_value() != o.maps.has_value()) return false;
        if (!maps) return true;
        return maps->f == o.maps->f && maps->phi == o.maps->phi && maps->F == o.maps->F &&
               maps->G == o.maps->G;
    };
    return schema_version == o.schema_version && params == o.params &&
           short_base_cycles == o.short_base_cycles &&
           long_base_cycles == o.long_base_cycles && maps_eq();
}

Certificate make_certificate(const BaseCycleSet& base, bool emit_maps) {
    Certificate cert;
    cert.params = base.params;
    cert.short_base_cycles = canonicalize_list(base.shorts);
    cert.long_base_cycles = canonicalize_list(base.longs);
    if (emit_maps && base.provenance) {
        CertificateMaps maps;
        const Provenance& prov = *base.provenance;
        const int t = base.params.ell * base.params.n;
        for (int x = 2; x <= t - 1; ++x) {
            if (prov.f.has(x) && prov.f.get(x) != 0) maps.f[x] = prov.f.get(x);
            if (prov.phi.has(x)) maps.phi[x] = prov.phi.get(x);
            maps.F[x] = prov.F.get(x);
            maps.G[x] = prov.G.get(x);
        }
        cert.maps = std::move(maps);
    }
    return cert;
}

BaseCycleSet to_base_cycle_set(const Certificate& cert) {
    BaseCycleSet base;
    base.params = cert.params;
    base.shorts = cert.short_base_cycles;
    base.longs = cert.long_base_cycles;
    return base;
}

std::string serialize(const Certificate& cert, CertFormat format) {
    Certificate canon = cert;
    canon.short_base_cycles = canonicalize_list(canon.short_base_cycles);
    canon.long_base_cycles = canonicalize_list(canon.long_base_cycles);
    return format == CertFormat::Json ? serialize_json(canon) : serialize_text(canon);
}

Certificate deserialize(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                               text[i] == '\r'))
        ++i;
    if (i >= text.size()) throw ParseError("empty input", 0);
    try {
        return text[i] == '{' ? deserialize_json(text) : deserialize_text(text);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace hwp
