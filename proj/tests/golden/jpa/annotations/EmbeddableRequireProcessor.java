package annotations;

import java.util.Set;
import javax.annotation.processing.AbstractProcessor;
import javax.annotation.processing.RoundEnvironment;
import javax.annotation.processing.SupportedAnnotationTypes;
import javax.annotation.processing.SupportedSourceVersion;
import javax.lang.model.SourceVersion;
import javax.lang.model.element.Element;
import javax.lang.model.element.ElementKind;
import javax.lang.model.element.Modifier;
import javax.lang.model.element.TypeElement;
import javax.tools.Diagnostic.Kind;

@SupportedAnnotationTypes("annotations.Embeddable")
@SupportedSourceVersion(SourceVersion.RELEASE_6)
public class EmbeddableRequireProcessor extends AbstractProcessor {

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
        if (!check_allowed_targets(elt)) {
            return false;
        }
        if (!check_require_class(elt)) {
            return false;
        }
        return true;
    }

    // check: allowed_targets
    // Embeddable may only annotate a class
    private boolean check_allowed_targets(Element elt) {
        return elt.getKind() == ElementKind.CLASS;
    }

    // check: require_class
    // Embeddable requires the annotated element to be a class
    private boolean check_require_class(Element elt) {
        if (!(elt.getKind() == ElementKind.CLASS)) {
            return true;
        }
        boolean atom0 = elt.getKind() == ElementKind.CLASS;
        return atom0;
    }
}
