#include "symprod/serialize.hpp"

namespace symprod {

std::string integer_str(const Integer& v) { return v.get_str(); }

Integer integer_from_str(const std::string& s) {
    if (s.empty())
        throw InvalidInput("integer_from_str: empty string");
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("integer_from_str: malformed integer '" + s + "'");
    }
}

ojson coeffs_json(const PoincarePolynomial& p) {
    ojson arr = ojson::array();
    for (const Integer& c : p.coeffs())
        arr.push_back(integer_str(c));
    return arr;
}

PoincarePolynomial poly_from_coeffs_json(const ojson& j) {
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j)
        coeffs.push_back(integer_from_str(c.get<std::string>()));
    return PoincarePolynomial(std::move(coeffs));
}

ojson partition_json(const Partition& p) {
    ojson arr = ojson::array();
    for (int part : p.parts())
        arr.push_back(part);
    return arr;
}

Partition partition_from_json(const ojson& j) {
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const auto& part : j)
        parts.push_back(part.get<int>());
    return Partition(std::move(parts));
}

ojson certificate_json(const NonIsoCertificate& c) {
    ojson j;
    j["kind"] = cert_kind_name(c.kind);
    ojson payload = ojson::object();
    switch (c.kind) {
    case CertKind::EqualPartitions:
        break;
    case CertKind::FirstBettiDiffers: {
        const auto& p = std::get<FirstBettiPayload>(c.payload);
        payload["a"] = p.first_betti_a;
        payload["b"] = p.first_betti_b;
        break;
    }
    case CertKind::BettiDiffers: {
        const auto& p = std::get<BettiPayload>(c.payload);
        payload["degree"] = p.degree;
        payload["a"] = integer_str(p.betti_a);
        payload["b"] = integer_str(p.betti_b);
        break;
    }
    case CertKind::FiberMultiproj: {
        const auto& p = std::get<FiberPayload>(c.payload);
        payload["dims_a"] = p.dims_a;
        payload["dims_b"] = p.dims_b;
        break;
    }
    case CertKind::PicardRankDiffers: {
        const auto& p = std::get<PicardPayload>(c.payload);
        payload["a"] = p.rank_a;
        payload["b"] = p.rank_b;
        break;
    }
    case CertKind::PolynomialDiffers: {
        const auto& p = std::get<PolyDiffPayload>(c.payload);
        payload["degree"] = p.degree;
        payload["a"] = integer_str(p.coeff_a);
        payload["b"] = integer_str(p.coeff_b);
        break;
    }
    }
    j["payload"] = std::move(payload);
    return j;
}

NonIsoCertificate certificate_from_json(const ojson& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const ojson& payload = j.at("payload");
    if (kind == "EqualPartitions")
        return {CertKind::EqualPartitions, EqualPartitionsPayload{}};
    if (kind == "FirstBettiDiffers")
        return {CertKind::FirstBettiDiffers,
                FirstBettiPayload{payload.at("a").get<long long>(),
                                  payload.at("b").get<long long>()}};
    if (kind == "BettiDiffers")
        return {CertKind::BettiDiffers,
                BettiPayload{payload.at("degree").get<long long>(),
                             integer_from_str(payload.at("a").get<std::string>()),
                             integer_from_str(payload.at("b").get<std::string>())}};
    if (kind == "FiberMultiproj")
        return {CertKind::FiberMultiproj,
                FiberPayload{payload.at("dims_a").get<std::vector<int>>(),
                             payload.at("dims_b").get<std::vector<int>>()}};
    if (kind == "PicardRankDiffers")
        return {CertKind::PicardRankDiffers,
                PicardPayload{payload.at("a").get<int>(), payload.at("b").get<int>()}};
    if (kind == "PolynomialDiffers")
        return {CertKind::PolynomialDiffers,
                PolyDiffPayload{payload.at("degree").get<long long>(),
                                integer_from_str(payload.at("a").get<std::string>()),
                                integer_from_str(payload.at("b").get<std::string>())}};
    throw InvalidInput("certificate_from_json: unknown kind '" + kind + "'");
}

ojson report_json(const ClassificationReport& r) {
    ojson j;
    j["n"] = r.n;
    j["genus"] = r.genus;
    j["count"] = integer_str(r.count);
    ojson parts = ojson::array();
    for (const Partition& p : r.partitions)
        parts.push_back(partition_json(p));
    j["partitions"] = std::move(parts);
    ojson certs = ojson::array();
    for (const PairCertificate& pc : r.certificates) {
        ojson e;
        e["i"] = pc.i;
        e["j"] = pc.j;
        ojson c = certificate_json(pc.cert);
        e["kind"] = c["kind"];
        e["payload"] = c["payload"];
        certs.push_back(std::move(e));
    }
    j["certificates"] = std::move(certs);
    return j;
}

ClassificationReport report_from_json(const ojson& j) {
    ClassificationReport r;
    r.n = j.at("n").get<int>();
    r.genus = j.at("genus").get<int>();
    r.count = integer_from_str(j.at("count").get<std::string>());
    for (const auto& p : j.at("partitions"))
        r.partitions.push_back(partition_from_json(p));
    for (const auto& e : j.at("certificates"))
        r.certificates.push_back(
            {e.at("i").get<int>(), e.at("j").get<int>(), certificate_from_json(e)});
    return r;
}

ojson slope_json(const Slope& s) {
    ojson j;
    j["numerator"] = s.num;
    j["denominator"] = s.den;
    j["integral"] = s.is_integral();
    return j;
}

Slope slope_from_json(const ojson& j) {
    return {j.at("numerator").get<long long>(), j.at("denominator").get<long long>()};
}

ojson quot_index_json(const QuotIndex& q) {
    ojson j;
    j["rank"] = q.rank;
    j["torsion_degree"] = q.torsion_degree;
    j["nonempty"] = q.is_nonempty();
    j["wpp"] = q.has_wpp();
    j["dp"] = q.has_dp();
    return j;
}

QuotIndex quot_index_from_json(const ojson& j) {
    return {j.at("rank").get<int>(), j.at("torsion_degree").get<long long>()};
}

ojson make_envelope(const std::string& command, ojson input, ojson result) {
    ojson j;
    j["command"] = command;
    j["input"] = std::move(input);
    j["result"] = std::move(result);
    j["version"] = kArtifactVersion;
    return j;
}

} // namespace symprod
