#include "nilstalk/spaces.hpp"

#include <sstream>
#include <stdexcept>

namespace nilstalk {

SpaceDescriptor SpaceDescriptor::projective(std::int64_t m) {
    if (m < 0) throw std::domain_error("projective space needs m >= 0");
    return {Kind::Projective, m, 0};
}

SpaceDescriptor SpaceDescriptor::grassmannian(std::int64_t k, std::int64_t n) {
    if (k < 0 || k > n) throw std::domain_error("Grassmannian needs 0 <= k <= n");
    return {Kind::Grassmannian, k, n};
}

SpaceDescriptor SpaceDescriptor::full_flag(std::int64_t n) {
    if (n < 1) throw std::domain_error("flag variety needs n >= 1");
    return {Kind::FullFlag, n, 0};
}

SpaceDescriptor SpaceDescriptor::lens_space(std::int64_t m, std::int64_t d) {
    if (m < 1 || d < 1) throw std::domain_error("lens space needs m >= 1, d >= 1");
    return {Kind::LensSpace, m, d};
}

namespace {

std::vector<std::int64_t> parse_ints(const std::string& body, std::size_t expected) {
    std::vector<std::int64_t> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        try {
            out.push_back(std::stoll(item, &pos));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad space parameter '" + item + "'");
        }
        if (pos != item.size())
            throw std::invalid_argument("bad space parameter '" + item + "'");
    }
    if (out.size() != expected)
        throw std::invalid_argument("wrong number of space parameters in '" + body + "'");
    return out;
}

}  // namespace

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad space spec '" + text + "'");
    std::string head = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (head == "proj") return projective(parse_ints(body, 1)[0]);
    if (head == "grass") {
        auto v = parse_ints(body, 2);
        return grassmannian(v[0], v[1]);
    }
    if (head == "flag") return full_flag(parse_ints(body, 1)[0]);
    if (head == "lens") {
        auto v = parse_ints(body, 2);
        return lens_space(v[0], v[1]);
    }
    throw std::invalid_argument("unknown space kind '" + head + "'");
}

std::string SpaceDescriptor::to_string() const {
    switch (kind) {
        case Kind::Projective: return "proj:" + std::to_string(a);
        case Kind::Grassmannian:
            return "grass:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::FullFlag: return "flag:" + std::to_string(a);
        case Kind::LensSpace:
            return "lens:" + std::to_string(a) + "," + std::to_string(b);
    }
    return "?";
}

std::int64_t SpaceDescriptor::complex_dim() const {
    switch (kind) {
        case Kind::Projective: return a;
        case Kind::Grassmannian: return a * (b - a);
        case Kind::FullFlag: return a * (a - 1) / 2;
        case Kind::LensSpace:
            throw std::domain_error("lens space has no complex dimension");
    }
    return 0;
}

std::vector<std::int64_t> gaussian_binomial(std::int64_t k, std::int64_t n) {
    if (k < 0 || k > n) throw std::domain_error("gaussian_binomial needs 0 <= k <= n");
    // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<std::vector<std::int64_t>> row(k + 1);
    for (std::int64_t j = 0; j <= k; ++j) row[j] = {j == 0 ? 1 : 0};
    for (std::int64_t m = 1; m <= n; ++m) {
        for (std::int64_t j = std::min(k, m); j >= 1; --j) {
            std::vector<std::int64_t> next = row[j - 1];
            next.resize(std::max(next.size(), row[j].size() + j), 0);
            for (std::size_t e = 0; e < row[j].size(); ++e)
                next[e + j] += row[j][e];
            row[j] = std::move(next);
        }
    }
    while (row[k].size() > 1 && row[k].back() == 0) row[k].pop_back();
    return row[k];
}

std::vector<std::int64_t> q_factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("q_factorial needs n >= 0");
    std::vector<std::int64_t> acc = {1};
    for (std::int64_t j = 2; j <= n; ++j) {
        std::vector<std::int64_t> next(acc.size() + j - 1, 0);
        for (std::size_t e = 0; e < acc.size(); ++e)
            for (std::int64_t t = 0; t < j; ++t)
                next[e + t] += acc[e];
        acc = std::move(next);
    }
    return acc;
}

GradedGroup cohomology(const SpaceDescriptor& s) {
    GradedGroup out(Coefficients::integers());
    switch (s.kind) {
        case SpaceDescriptor::Kind::Projective:
            for (std::int64_t j = 0; j <= s.a; ++j)
                out.set(static_cast<int>(2 * j), FGAbGroup::free(1));
            break;
        case SpaceDescriptor::Kind::Grassmannian: {
            auto coeffs = gaussian_binomial(s.a, s.b);
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (coeffs[j] > 0)
                    out.set(static_cast<int>(2 * j), FGAbGroup::free(coeffs[j]));
            break;
        }
        case SpaceDescriptor::Kind::FullFlag: {
            auto coeffs = q_factorial(s.a);
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (coeffs[j] > 0)
                    out.set(static_cast<int>(2 * j), FGAbGroup::free(coeffs[j]));
            break;
        }
        case SpaceDescriptor::Kind::LensSpace: {
            out.set(0, FGAbGroup::free(1));
            for (std::int64_t j = 1; j < s.a; ++j)
                out.add(static_cast<int>(2 * j), FGAbGroup::cyclic(s.b));
            out.add(static_cast<int>(2 * s.a - 1), FGAbGroup::free(1));
            break;
        }
    }
    return out;
}

std::int64_t euler_characteristic(const SpaceDescriptor& s) {
    return euler(cohomology(s));
}

}  // namespace nilstalk
