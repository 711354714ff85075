#pragma once

#include "urforge/colouring.hpp"
#include "urforge/space.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace urforge {

// A serialized claim about a finite construction. The document holds the
// induced ambient subspace on every point it mentions, their colours, named
// point sets and a "checks" array replayed by verify_certificate.
struct Certificate {
    nlohmann::json doc;
    const std::string& kind() const { return doc.at("kind").get_ref<const std::string&>(); }
    std::vector<Point> set(const std::string& name) const { return doc.at("sets").at(name).get<std::vector<Point>>(); }
};

class CertificateWriter {
public:
    CertificateWriter(std::string kind, const Space& ambient, Colouring& chi);

    void points(const std::vector<Point>& pts);
    void set(const std::string& name, const std::vector<Point>& pts);
    void check(nlohmann::json c);
    void info(const std::string& key, nlohmann::json v);
    // Nested certificate, verified along with this one.
    void part(const Certificate& c);
    // Distances as [[point, "d"], ...] for orbit checks.
    nlohmann::json fn(const TypeFn& t) const;
    // Adds an embedding check; the source is serialized restricted to `e.source`.
    void embedding(const Space& source, const std::vector<Point>& src, const std::vector<Point>& img,
                   const std::vector<Point>& fixed);

    Certificate finish(std::optional<std::string> timestamp = std::nullopt) const;

private:
    std::string kind_;
    const Space& amb_;
    Colouring& chi_;
    std::vector<char> mark_;
    nlohmann::json sets_ = nlohmann::json::object();
    nlohmann::json checks_ = nlohmann::json::array();
    nlohmann::json info_ = nlohmann::json::object();
    nlohmann::json parts_ = nlohmann::json::array();
};

// SHA-256 over the canonical dump with "digest" and "timestamp" removed.
std::string certificate_digest(const nlohmann::json& doc);

struct Verdict {
    bool ok = false;
    std::string failure;  // first failing check
    int checks = 0;
};

// Replays every check from the raw document only.
Verdict verify_certificate(const nlohmann::json& doc);
inline Verdict verify_certificate(const Certificate& c) { return verify_certificate(c.doc); }

}  // namespace urforge
