package annotations;

import java.util.Set;
import javax.annotation.processing.AbstractProcessor;
import javax.annotation.processing.RoundEnvironment;
import javax.annotation.processing.SupportedAnnotationTypes;
import javax.annotation.processing.SupportedSourceVersion;
import javax.lang.model.SourceVersion;
import javax.lang.model.element.AnnotationMirror;
import javax.lang.model.element.Element;
import javax.lang.model.element.ElementKind;
import javax.lang.model.element.Modifier;
import javax.lang.model.element.TypeElement;
import javax.tools.Diagnostic.Kind;

@SupportedAnnotationTypes("annotations.Embeddable")
@SupportedSourceVersion(SourceVersion.RELEASE_6)
public class EmbeddableForbidProcessor extends AbstractProcessor {

    @Override
    public boolean process(Set<? extends TypeElement> annotations,
                           RoundEnvironment objects) {
        // iterate over all objects to check
        for (Element elt : objects.getElementsAnnotatedWith(Embeddable.class)) {
            if (!isPlacementValid(elt)) {
                this.processingEnv.getMessager().printMessage(
                    Kind.ERROR,
                    "The annotation @Embeddable is disallowed for this location.",
                    elt);
            }
        }
        return true;
    }

    private boolean isPlacementValid(Element elt) {
        if (!check_at_class__forbid_annId_method(elt)) {
            return false;
        }
        if (!check_at_class__forbid_annEmbeddedId_method(elt)) {
            return false;
        }
        if (!check_at_class__forbid_annId_field(elt)) {
            return false;
        }
        if (!check_at_class__forbid_annEmbeddedId_field(elt)) {
            return false;
        }
        return true;
    }

    // check: at_class__forbid_annId_method
    // Embeddable forbids a method annotated @Id in the annotated class
    private boolean check_at_class__forbid_annId_method(Element elt) {
        if (elt.getKind() != ElementKind.CLASS) {
            return true;
        }
        boolean atom0 = false;
        for (Element member : elt.getEnclosedElements()) {
            if (member.getKind() == ElementKind.METHOD
                && hasAnnotation(member, "annotations.Id")) {
                atom0 = true;
            }
        }
        return !(atom0);
    }

    // check: at_class__forbid_annEmbeddedId_method
    // Embeddable forbids a method annotated @EmbeddedId in the annotated class
    private boolean check_at_class__forbid_annEmbeddedId_method(Element elt) {
        if (elt.getKind() != ElementKind.CLASS) {
            return true;
        }
        boolean atom0 = false;
        for (Element member : elt.getEnclosedElements()) {
            if (member.getKind() == ElementKind.METHOD
                && hasAnnotation(member, "annotations.EmbeddedId")) {
                atom0 = true;
            }
        }
        return !(atom0);
    }

    // check: at_class__forbid_annId_field
    // Embeddable forbids a field annotated @Id in the annotated class
    private boolean check_at_class__forbid_annId_field(Element elt) {
        if (elt.getKind() != ElementKind.CLASS) {
            return true;
        }
        boolean atom0 = false;
        for (Element member : elt.getEnclosedElements()) {
            if (member.getKind() == ElementKind.FIELD
                && hasAnnotation(member, "annotations.Id")) {
                atom0 = true;
            }
        }
        return !(atom0);
    }

    // check: at_class__forbid_annEmbeddedId_field
    // Embeddable forbids a field annotated @EmbeddedId in the annotated class
    private boolean check_at_class__forbid_annEmbeddedId_field(Element elt) {
        if (elt.getKind() != ElementKind.CLASS) {
            return true;
        }
        boolean atom0 = false;
        for (Element member : elt.getEnclosedElements()) {
            if (member.getKind() == ElementKind.FIELD
                && hasAnnotation(member, "annotations.EmbeddedId")) {
                atom0 = true;
            }
        }
        return !(atom0);
    }

    private static boolean hasAnnotation(Element e, String name) {
        for (AnnotationMirror mirror : e.getAnnotationMirrors()) {
            TypeElement type = (TypeElement) mirror.getAnnotationType().asElement();
            if (type.getQualifiedName().contentEquals(name)) {
                return true;
            }
        }
        return false;
    }
}
