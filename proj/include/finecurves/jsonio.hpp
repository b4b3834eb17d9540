#pragma once

#include <string>

#include "finecurves/verifier.hpp"

namespace finecurves {

// On-disk certificate document: the certificate plus the verdict recorded by
// whoever wrote the file ("ok", "mismatch", or "unchecked"). The verdict is
// informational; readers re-verify from scratch.
struct CertificateFile {
    Certificate cert;
    std::string verdict = "unchecked";
};

// Serializes to JSON with fields {graph, semantics, surface, curves, trace,
// verdict}; the graph is graph6 text and every rational is a canonical "p/q"
// string, so emit -> parse -> emit is byte-identical.
std::string certificate_to_text(const CertificateFile& file);

// Parses and structurally validates a certificate document (see
// docs/certificate.schema.json); rebuilds the chart atlas from the recorded
// surface kind. Throws MalformedCertificate on any structural problem.
CertificateFile certificate_from_text(const std::string& text);

// A bare {"curves": [...]} document in the same per-curve format, for
// commands whose result is a list of curves rather than a certificate.
std::string curves_to_text(const std::vector<Curve>& curves);

// File helpers; throw IoFailure.
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

inline void save_certificate(const CertificateFile& file, const std::string& path) {
    save_text_file(path, certificate_to_text(file));
}
inline CertificateFile load_certificate(const std::string& path) {
    return certificate_from_text(load_text_file(path));
}

} // namespace finecurves
