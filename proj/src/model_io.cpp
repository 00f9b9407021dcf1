/*
 * Copyright 2026 The supjcir authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "supjcir/model_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace supjcir::model_io {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string serialize_model(const process::SupJcirModel& model, const Provenance& prov) {
    std::ostringstream os;
    os << "a = " << format_double(model.a) << "\n";
    os << "sigma = " << format_double(model.sigma) << "\n";
    if (const auto* e = std::get_if<jumps::ExponentialJump>(&model.jump.variant())) {
        os << "jump.variant = exponential\n";
        os << "jump.mu = " << format_double(e->mu) << "\n";
        os << "jump.beta = " << format_double(e->beta) << "\n";
    } else if (const auto* t = std::get_if<jumps::TemperedStable>(&model.jump.variant())) {
        os << "jump.variant = tempered_stable\n";
        os << "jump.gamma = " << format_double(t->gamma) << "\n";
        os << "jump.beta = " << format_double(t->beta) << "\n";
        os << "jump.alpha = " << format_double(t->alpha) << "\n";
    } else {
        os << "jump.variant = none\n";
    }
    if (const auto* g = std::get_if<mixing::GammaMixing>(&model.mix.variant())) {
        os << "mixing.variant = gamma\n";
        os << "mixing.omega = " << format_double(g->omega) << "\n";
        os << "mixing.theta = " << format_double(g->theta) << "\n";
    } else {
        const auto& d = std::get<mixing::DiscreteMixing>(model.mix.variant());
        os << "mixing.variant = discrete\n";
        os << "mixing.atom_count = " << d.atoms.size() << "\n";
        for (std::size_t i = 0; i < d.atoms.size(); ++i) {
            os << "mixing.atom." << i << ".weight = " << format_double(d.atoms[i].weight)
               << "\n";
            os << "mixing.atom." << i << ".speed = " << format_double(d.atoms[i].speed) << "\n";
        }
    }
    if (prov.y) os << "fit.y = " << format_double(*prov.y) << "\n";
    if (prov.error_metric) os << "fit.error_metric = " << format_double(*prov.error_metric) << "\n";
    if (prov.fingerprint) os << "fit.fingerprint = " << *prov.fingerprint << "\n";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw ParseError("model file: value of '" + key + "' is not a number: " + value);
    return out;
}

} // namespace

ModelFile parse_model(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("model file line " + std::to_string(lineno) + ": missing '='");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("model file line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ParseError("model file: duplicate key '" + key + "'");
    }

    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("model file: missing key '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto take_double = [&](const std::string& key) { return parse_double(key, take(key)); };

    const double a = take_double("a");
    const double sigma = take_double("sigma");

    jumps::JumpMeasure jump;
    const std::string jv = take("jump.variant");
    if (jv == "exponential") {
        const double mu = take_double("jump.mu");
        const double beta = take_double("jump.beta");
        jump = jumps::JumpMeasure::exponential(mu, beta);
    } else if (jv == "tempered_stable") {
        const double gamma = take_double("jump.gamma");
        const double beta = take_double("jump.beta");
        const double alpha = take_double("jump.alpha");
        jump = jumps::JumpMeasure::tempered_stable(gamma, beta, alpha);
    } else if (jv != "none") {
        throw ParseError("model file: unknown jump.variant '" + jv + "'");
    }

    const std::string mv = take("mixing.variant");
    std::optional<mixing::MixingMeasure> mix;
    if (mv == "gamma") {
        const double omega = take_double("mixing.omega");
        const double theta = take_double("mixing.theta");
        mix = mixing::MixingMeasure::gamma(omega, theta);
    } else if (mv == "discrete") {
        const double count_raw = take_double("mixing.atom_count");
        const long count = static_cast<long>(count_raw);
        if (count < 1 || static_cast<double>(count) != count_raw)
            throw ParseError("model file: mixing.atom_count must be a positive integer");
        std::vector<mixing::Atom> atoms;
        for (long i = 0; i < count; ++i) {
            const std::string base = "mixing.atom." + std::to_string(i);
            atoms.push_back({take_double(base + ".weight"), take_double(base + ".speed")});
        }
        mix = mixing::MixingMeasure::discrete(std::move(atoms));
    } else {
        throw ParseError("model file: unknown mixing.variant '" + mv + "'");
    }

    Provenance prov;
    if (kv.count("fit.y")) prov.y = take_double("fit.y");
    if (kv.count("fit.error_metric")) prov.error_metric = take_double("fit.error_metric");
    if (kv.count("fit.fingerprint")) prov.fingerprint = take("fit.fingerprint");

    if (!kv.empty()) throw ParseError("model file: unknown key '" + kv.begin()->first + "'");

    return {process::SupJcirModel(a, sigma, std::move(jump), std::move(*mix)), prov};
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

void save_model(const std::string& path, const process::SupJcirModel& model,
                const Provenance& prov) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write model file: " + path);
    out << serialize_model(model, prov);
}

std::string fingerprint(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf, 16);
}

} // namespace supjcir::model_io
